// Throughput of the exact-arithmetic hot paths: the closed-form
// pseudometric, ball decomposition and measure, membership, sampling,
// and the rectangle cover.

#include <benchmark/benchmark.h>

#include <jumplab/analysis.hpp>
#include <jumplab/cover.hpp>
#include <jumplab/jump_space.hpp>
#include <jumplab/oracle.hpp>

#include <vector>

using namespace jumplab;

namespace {

SpacePoint random_space_point(unsigned depth, unsigned bits, Rng& rng) {
    return SpacePoint{random_point(depth, rng),
                      Dyadic(mpz_class(rng.below((1ull << bits) + 1)), bits)};
}

std::vector<SpacePoint> point_pool(unsigned depth, unsigned bits, std::size_t count) {
    Rng rng(987);
    std::vector<SpacePoint> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pool.push_back(random_space_point(depth, bits, rng));
    return pool;
}

void bm_jump_distance(benchmark::State& state) {
    const auto depth = static_cast<unsigned>(state.range(0));
    const auto pool = point_pool(depth, 12, 512);
    std::size_t i = 0;
    for (auto _ : state) {
        const Dyadic d = jump_distance(pool[i % pool.size()], pool[(i + 1) % pool.size()]);
        benchmark::DoNotOptimize(d);
        ++i;
    }
}

void bm_jump_distance_bruteforce(benchmark::State& state) {
    const auto pool = point_pool(5, 10, 128);
    std::size_t i = 0;
    for (auto _ : state) {
        const Dyadic d =
            jump_distance_bruteforce(pool[i % pool.size()], pool[(i + 1) % pool.size()]);
        benchmark::DoNotOptimize(d);
        ++i;
    }
}

void bm_ball_decompose(benchmark::State& state) {
    const auto depth = static_cast<unsigned>(state.range(0));
    const auto pool = point_pool(depth, 12, 128);
    const Dyadic r = unit_pow2(3);
    std::size_t i = 0;
    for (auto _ : state) {
        const BallDecomposition ball = ball_decompose(pool[i % pool.size()], r);
        benchmark::DoNotOptimize(ball.center_line.empty());
        ++i;
    }
}

void bm_ball_measure(benchmark::State& state) {
    const auto depth = static_cast<unsigned>(state.range(0));
    const auto pool = point_pool(depth, 12, 128);
    const Dyadic r = unit_pow2(3);
    std::size_t i = 0;
    for (auto _ : state) {
        const BigRational m = ball_measure(pool[i % pool.size()], r);
        benchmark::DoNotOptimize(m.sign());
        ++i;
    }
}

void bm_ball_contains(benchmark::State& state) {
    Rng rng(988);
    const SpacePoint center = random_space_point(12, 12, rng);
    const BallDecomposition ball = ball_decompose(center, unit_pow2(2));
    const auto pool = point_pool(12, 12, 1024);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ball.contains(pool[i % pool.size()]));
        ++i;
    }
}

void bm_sample_ball(benchmark::State& state) {
    Rng rng(989);
    const SpacePoint center = random_space_point(12, 12, rng);
    const BallDecomposition ball = ball_decompose(center, unit_pow2(2));
    for (auto _ : state) {
        const SpacePoint q = sample_ball(ball, rng);
        benchmark::DoNotOptimize(q.height.sign());
    }
}

void bm_rectangle_cover(benchmark::State& state) {
    Rng rng(990);
    std::vector<SpacePoint> centers;
    while (centers.size() < 64) {
        const Dyadic t(mpz_class(2 * (256 + rng.below(1536)) + 1), 12);
        centers.push_back(SpacePoint{random_point(12, rng), t});
    }
    const Dyadic r = unit_pow2(12);
    const BigRational eps(1, 10);
    std::size_t i = 0;
    for (auto _ : state) {
        const CoverResult cover = rectangle_cover(centers[i % centers.size()], r, eps);
        benchmark::DoNotOptimize(cover.k1);
        ++i;
    }
}

BENCHMARK(bm_jump_distance)->Arg(8)->Arg(12)->Arg(26);
BENCHMARK(bm_jump_distance_bruteforce);
BENCHMARK(bm_ball_decompose)->Arg(8)->Arg(12)->Arg(26);
BENCHMARK(bm_ball_measure)->Arg(8)->Arg(12)->Arg(26);
BENCHMARK(bm_ball_contains);
BENCHMARK(bm_sample_ball);
BENCHMARK(bm_rectangle_cover);

} // namespace

BENCHMARK_MAIN();
