#include <jumplab/oracle.hpp>

#include <jumplab/grid.hpp>

namespace jumplab {

Dyadic jump_distance_bruteforce(const SpacePoint& p, const SpacePoint& q) {
    const unsigned m = agreement_depth(p.base, q.base);
    if (m == p.depth()) return abs(p.height - q.height);

    bool have = false;
    Dyadic best;
    for (unsigned k = 0; k <= m; ++k) {
        const mpz_class points = mpz_class(1) << k;
        for (mpz_class idx = 0; idx <= points; ++idx) {
            const Dyadic u(idx, k);
            const Dyadic cand = abs(p.height - u) + abs(u - q.height);
            if (!have || cand < best) {
                best = cand;
                have = true;
            }
        }
    }
    return best;
}

BigRational ball_measure_by_enumeration(const SpacePoint& center, const Dyadic& radius) {
    validate_space_point(center);
    require(radius.sign() > 0, "ball radius must be positive");
    const unsigned n = center.depth();
    require(n <= 5, "enumeration oracle is limited to depth <= 5");

    const Dyadic& t = center.height;
    BigRational total;
    for (const PointM& y : enumerate_points(n)) {
        const unsigned m = agreement_depth(center.base, y);
        IntervalUnion section;
        if (m == n) {
            if (auto line = clip_to_unit(t - radius, t + radius)) {
                section.insert(line->first, line->second);
            }
        } else {
            const mpz_class points = mpz_class(1) << m;
            for (mpz_class idx = 0; idx <= points; ++idx) {
                const Dyadic u(idx, m);
                const Dyadic gap = abs(t - u);
                if (gap < radius) {
                    const Dyadic w = radius - gap;
                    if (auto part = clip_to_unit(u - w, u + w)) {
                        section.insert(part->first, part->second);
                    }
                }
            }
        }
        if (!section.empty()) {
            total += nu(n) * BigRational(section.total_length());
        }
    }
    return total;
}

namespace {

Dyadic random_height(Rng& rng, unsigned bits) {
    return Dyadic(mpz_class(rng.below((1ull << bits) + 1)), bits);
}

} // namespace

SelfTestResult selftest(unsigned depth, unsigned trials, Rng& rng) {
    require(depth >= 2 && depth <= 5, "selftest depth must be in [2,5]");
    require(trials >= 1, "selftest needs at least one trial");

    SelfTestResult out;
    out.report.experiment = "selftest";
    out.report.provenance = "sec3";
    out.report.add_meta("depth", std::to_string(depth));
    out.report.add_meta("trials", std::to_string(trials));
    out.report.columns = {"check", "comparisons", "mismatches", "status"};

    const auto add_check = [&](const std::string& name, unsigned long comparisons,
                               unsigned long mismatches) {
        out.report.add_row({name, std::to_string(comparisons), std::to_string(mismatches),
                            mismatches == 0 ? "ok" : "MISMATCH"});
        return mismatches == 0;
    };

    bool good = true;

    {
        unsigned long bad = 0;
        for (unsigned i = 0; i < trials; ++i) {
            const SpacePoint p{random_point(depth, rng), random_height(rng, 10)};
            const SpacePoint q{random_point(depth, rng), random_height(rng, 10)};
            if (jump_distance(p, q) != jump_distance_bruteforce(p, q)) ++bad;
        }
        good = add_check("closed form distance vs brute force", trials, bad) && good;
    }

    {
        unsigned long bad = 0;
        for (unsigned i = 0; i < trials; ++i) {
            const SpacePoint center{random_point(depth, rng), random_height(rng, 10)};
            const Dyadic r(mpz_class(rng.below(1u << 6) + 1), 6);
            if (ball_measure(center, r) != ball_measure_by_enumeration(center, r)) ++bad;
        }
        good = add_check("annulus measure vs island enumeration", trials, bad) && good;
    }

    {
        constexpr unsigned kProbes = 100;
        unsigned long bad = 0;
        for (unsigned i = 0; i < trials; ++i) {
            const SpacePoint center{random_point(depth, rng), random_height(rng, 10)};
            const Dyadic r(mpz_class(rng.below(1u << 6) + 1), 6);
            const BallDecomposition ball = ball_decompose(center, r);
            for (unsigned j = 0; j < kProbes; ++j) {
                const SpacePoint q{random_point(depth, rng), random_height(rng, 10)};
                const bool by_sections = ball.contains(q);
                const bool by_metric = jump_distance(center, q) < r;
                if (by_sections != by_metric) ++bad;
            }
        }
        good = add_check("decomposition membership vs metric",
                         static_cast<unsigned long>(trials) * kProbes, bad) &&
               good;
    }

    out.all_passed = good;
    return out;
}

} // namespace jumplab
