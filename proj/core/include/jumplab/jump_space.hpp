#pragma once

// The product of the branching base space with the unit height interval,
// carrying the jump pseudometric: two points may exchange height only at a
// grid height whose level is no finer than their base agreement, so
//
//   d((x,t),(y,s)) = inf { |t-u| + |u-s| : u on a grid the pair can use }.
//
// Points over the same base move freely (the infimum degenerates to
// |t-s|). Distinct bases with agreement depth m may use exactly the
// level-m grid, because the usable grids are all nested inside it.

#include <jumplab/base_space.hpp>
#include <jumplab/dyadic.hpp>
#include <jumplab/grid.hpp>
#include <jumplab/interval_union.hpp>
#include <jumplab/rational.hpp>
#include <jumplab/rng.hpp>

#include <string>
#include <utility>
#include <vector>

namespace jumplab {

struct SpacePoint {
    PointM base;
    Dyadic height;

    unsigned depth() const { return base.depth(); }
    bool operator==(const SpacePoint&) const = default;

    // "1,2,1,4@11/64"
    std::string str() const;
    static SpacePoint parse(const std::string& text);
};

void validate_space_point(const SpacePoint& p);

// The jump pseudometric; exact. Requires equal truncation depths.
Dyadic jump_distance(const SpacePoint& p, const SpacePoint& q);

// max(base distance, height difference). Dominates the height gap and is
// dominated by the jump distance up to a factor of 3:
//   |t-s| <= jump_distance <= 3 * box_distance.
Dyadic box_distance(const SpacePoint& p, const SpacePoint& q);

// Exact open ball around a center, organized by base agreement depth.
// levels[k-1] (k = 1..N-1) is the set of heights reachable by bases that
// agree with the center to depth exactly k; center_line is the height
// interval over the center's own base. Sections grow with k (grid
// refinement), and every section interval sits inside (t-r, t+r).
//
// The sections are clipped to [0,1] and merged for measure work; the
// unclipped generating intervals are kept privately so membership can be
// decided exactly (merging two touching open intervals covers the seam
// point, which is *not* in the ball).
class BallDecomposition {
public:
    SpacePoint center;
    Dyadic radius;
    std::vector<IntervalUnion> levels;  // levels[k-1] = section at depth k
    IntervalUnion center_line;

    unsigned depth() const { return center.depth(); }

    // Weight of the depth-k annulus (k = 1..N-1): nu(k) - nu(k+1).
    // The center line carries weight nu(N).
    BigRational level_weight(unsigned k) const;

    BigRational total_measure() const;

    // Exact membership of q in the open ball, decided from the stored
    // decomposition (not from the closed-form metric, so the two routes
    // can cross-check each other).
    bool contains(const SpacePoint& q) const;

private:
    friend BallDecomposition ball_decompose(const SpacePoint&, const Dyadic&);
    // Unclipped generating intervals per level, ascending by grid point.
    std::vector<std::vector<std::pair<Dyadic, Dyadic>>> raw_levels_;
};

BallDecomposition ball_decompose(const SpacePoint& center, const Dyadic& radius);

BigRational ball_measure(const SpacePoint& center, const Dyadic& radius);

// Measure of the ball minus its portion with height in excluded_heights
// (applied to every base, section by section).
BigRational ball_measure_restricted(const SpacePoint& center, const Dyadic& radius,
                                    const IntervalUnion& excluded_heights);

// Draw from the normalized restriction of nu x Lebesgue to the open ball:
// stratum (annulus level or center line) by exact weighted length, then a
// uniform base in the annulus, then a height uniform on the stratum's
// section. Heights are drawn at dyadic resolution 2^-height_bits (refined
// locally when a section piece is narrower than that) and re-verified by
// the exact membership test.
SpacePoint sample_ball(const SpacePoint& center, const Dyadic& radius, Rng& rng,
                       unsigned height_bits = 40);

// Same draw against a precomputed decomposition (cheaper in loops).
SpacePoint sample_ball(const BallDecomposition& ball, Rng& rng,
                       unsigned height_bits = 40);

} // namespace jumplab
