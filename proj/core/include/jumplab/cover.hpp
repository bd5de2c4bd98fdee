#pragma once

// Covering most of a ball by at most three rectangles (an island times an
// open height interval). Around a center whose height stays off every
// grid the ball inspects, one rectangle hugs the finest grid point near
// the center and up to two more absorb coarse grid points in the outer
// halves of the height window; the uncovered fraction is computed exactly
// and stays below both the requested bound and 2/(k1+1).

#include <jumplab/base_space.hpp>
#include <jumplab/dyadic.hpp>
#include <jumplab/jump_space.hpp>
#include <jumplab/rational.hpp>

#include <vector>

namespace jumplab {

// island x (center - half_width, center + half_width), height part
// clipped to [0,1] for measure purposes.
struct Rectangle {
    Island island;
    Dyadic center;
    Dyadic half_width;

    unsigned level() const { return island.level(); }

    // nu(level) times the clipped height length.
    BigRational measure() const;

    bool operator==(const Rectangle&) const = default;
};

// Checks alphabet constraints, positive width, and that the center sits
// on the grid of the island's level. A full-depth island is a single
// base point whose heights move freely, so its center may be any dyadic.
void validate_rectangle(const Rectangle& r);

struct CoverResult {
    std::vector<Rectangle> rectangles;   // 1 to 3, coarsest role first
    BigRational uncovered_fraction;      // (ball - union) / ball, exact
    unsigned k1 = 0;                     // finest-grid level the cover keys on
    BigRational ball_measure;
    BigRational covered_measure;         // measure of the union of rectangles
};

// The admissibility conditions (violations throw, naming the condition):
//   - the center height's reduced level is at least the truncation depth
//     (its height lies on none of the grids the ball can see),
//   - (t - r, t + r) stays inside [0,1],
//   - every level k whose grid meets (t - r, t + r) satisfies
//     1/(k+1) < epsilon/2.
// k1 is the smallest level whose grid meets (t - r/2, t + r/2); when no
// level does, the cover degenerates to the center line rectangle at full
// depth, which covers the ball exactly whenever no grid meets the window
// at all.
CoverResult rectangle_cover(const SpacePoint& center, const Dyadic& radius,
                            const BigRational& epsilon);

} // namespace jumplab
