#pragma once

// Deterministic random source. Same seed => same stream on every platform,
// which the reproducibility contract needs; the standard <random>
// distributions are implementation-defined, so bounded draws are done here
// by rejection instead.

#include <jumplab/errors.hpp>

#include <gmpxx.h>

#include <array>
#include <cstdint>

namespace jumplab {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

// xoshiro256** seeded through splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = detail::splitmix64(s);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound), bound > 0. Masked rejection, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        require(bound > 0, "Rng::below: bound must be positive");
        if (bound == 1) return 0;
        std::uint64_t mask = ~0ull >> __builtin_clzll(bound - 1);
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        require(lo <= hi, "Rng::range: empty range");
        return lo + below(hi - lo + 1);
    }

    // Uniform in [0, bound) for big integers; rejection on the bit length.
    mpz_class below_big(const mpz_class& bound) {
        require(sgn(bound) > 0, "Rng::below_big: bound must be positive");
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        for (;;) {
            mpz_class v = 0;
            std::size_t filled = 0;
            while (filled < bits) {
                v <<= 64;
                v += next();
                filled += 64;
            }
            v >>= (filled - bits);
            if (v < bound) return v;
        }
    }

    // Derived independent stream (for splitting work deterministically).
    Rng split(std::uint64_t stream) {
        std::uint64_t s = next() ^ (0x0ddc0ffeebadf00dull + stream);
        return Rng(s);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> state_{};
};

} // namespace jumplab
