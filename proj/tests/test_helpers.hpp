#pragma once

// Shared between the unit tests and the acceptance runner: exact
// containment of cover rectangles in the generating ball, and random
// inputs in the regimes the exactness arguments need.

#include <jumplab/cover.hpp>
#include <jumplab/jump_space.hpp>

namespace jumplab::testing {

// Exact check that rectangle = island x (c - w, c + w) sits inside
// B(center, r). Every rectangle the cover produces uses an island whose
// prefix comes from the center's base, so a base agreeing with the center
// to depth m belongs to the island iff m >= level; such a point is in the
// ball iff its height lies in the level-m section (or the center line at
// full depth). The sections grow with m, so covering the rectangle's
// height interval at the island's own level and on the center line
// covers every case in between.
inline bool rectangle_inside_ball(const Rectangle& rect, const BallDecomposition& ball) {
    const auto clipped = clip_to_unit(rect.center - rect.half_width,
                                      rect.center + rect.half_width);
    if (!clipped) return true;  // empty height range: nothing to contain
    const unsigned n = ball.depth();
    for (unsigned m = rect.level(); m < n; ++m) {
        if (m == 0) return false;  // level-0 island holds bases outside every section
        if (!ball.levels[m - 1].covers(clipped->first, clipped->second)) return false;
    }
    return ball.center_line.covers(clipped->first, clipped->second);
}

inline bool cover_inside_ball(const CoverResult& cover, const BallDecomposition& ball) {
    for (const auto& rect : cover.rectangles) {
        if (!rectangle_inside_ball(rect, ball)) return false;
    }
    return true;
}

// Dyadic height with an odd numerator at the given level, uniformly from
// the interior dyadics of that form in (lo_16ths/16, hi_16ths/16).
inline Dyadic random_odd_height(Rng& rng, unsigned level, unsigned lo_16ths = 2,
                                unsigned hi_16ths = 14) {
    const mpz_class span = (mpz_class(1) << level) / 16;
    for (;;) {
        const mpz_class lo = span * lo_16ths;
        const mpz_class hi = span * hi_16ths;
        mpz_class m = lo + rng.below_big(hi - lo);
        if (mpz_odd_p(m.get_mpz_t())) return Dyadic(m, level);
    }
}

} // namespace jumplab::testing
