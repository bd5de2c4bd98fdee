#pragma once

// Independent slow routes to answers the fast implementations compute:
// the jump distance as a literal minimum over grid points, and ball
// measure by enumerating every base point and measuring its height
// section directly. These deliberately avoid the closed forms and the
// annulus weighting so agreement is evidence, not tautology.

#include <jumplab/jump_space.hpp>
#include <jumplab/report.hpp>
#include <jumplab/rng.hpp>

namespace jumplab {

// min over k <= agreement depth and u in I_k (all of them) of
// |t-u| + |u-s|; |t-s| for equal bases. Exponential in the agreement
// depth; intended for depths where 2^m is small.
Dyadic jump_distance_bruteforce(const SpacePoint& p, const SpacePoint& q);

// Sum over every base point y of nu(depth) times the length of
// { s : d((x,t),(y,s)) < r }, built as a literal union of the
// per-grid-point intervals. Requires depth <= 5 (depth! base points).
BigRational ball_measure_by_enumeration(const SpacePoint& center, const Dyadic& radius);

// Cross-checks at small depth, reported one row per check: closed-form
// distance vs. brute force on random pairs, ball measure vs. enumeration
// on random balls, and decomposition membership vs. the metric on random
// points. Any disagreement marks the run failed.
struct SelfTestResult {
    ScanReport report;
    bool all_passed = false;
};

SelfTestResult selftest(unsigned depth, unsigned trials, Rng& rng);

} // namespace jumplab
