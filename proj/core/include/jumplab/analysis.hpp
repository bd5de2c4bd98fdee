#pragma once

// Quantitative experiments on the jump space: ball-growth (doubling)
// ratios and their divergence along grid-avoiding heights, vertical
// derivatives and approximate-differentiability defects of Lipschitz
// fields, chart-increment uniqueness, porosity witnesses, and measure
// porosity.

#include <jumplab/dyadic.hpp>
#include <jumplab/fields.hpp>
#include <jumplab/jump_space.hpp>
#include <jumplab/rational.hpp>
#include <jumplab/rng.hpp>
#include <jumplab/sets.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumplab {

// Thrown when an iterative limit estimate fails to settle.
class no_stable_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Heights at distance >= 1/2^(k+2) from the level-k grid (non-strict).
// Balls around such heights at radius ~1/2^k see the level-k annulus in
// full, which drives the unbounded ball-growth ratios.
bool is_in_Ek(const Dyadic& t, unsigned k);

// ball_measure(center, C*r) / ball_measure(center, r), exact. C >= 1.
BigRational doubling_ratio(const SpacePoint& center, const Dyadic& r, const Dyadic& C);

struct NonDoublingRow {
    unsigned level = 0;             // n: radii are 1/2^n and 1/2^(n+2)
    bool valid = false;             // t in E_n?
    std::string skip_reason;        // set when not valid
    BigRational ratio;              // exact 4x-growth ratio
    BigRational lower_bound;        // 2(n+1)
    bool bound_satisfied = false;
};

// One row per requested level: the exact ratio
// ball(1/2^n) / ball(1/2^(n+2)) and the bound 2(n+1) it must beat.
// Levels where t leaves E_n are reported as skipped, not errors.
std::vector<NonDoublingRow> non_doubling_scan(const PointM& x, const Dyadic& t,
                                              const std::vector<unsigned>& levels);

// Limit of symmetric difference quotients (f(t+u) - f(t-u)) / 2u along
// u = 2^-j: each quotient is exact, and the scan stops once successive
// quotients differ by less than tol. Throws no_stable_limit if the
// quotients fail to settle before j reaches max_level (the limit need
// not exist). Requires height strictly inside (0,1).
double vertical_derivative(const LipschitzField& f, const SpacePoint& p,
                           const BigRational& tol, unsigned max_level = 48);

struct DefectEstimate {
    std::uint64_t exceed_count = 0;
    std::uint64_t samples = 0;
    double fraction = 0.0;
    double ci_low = 0.0;   // 95% Wilson interval for the exceed probability
    double ci_high = 0.0;
};

// Monte Carlo estimate of the ball fraction where the first-order vertical
// model breaks: mu{q in B(p,r) : |f(q) - f(p) - df*(height(q) - height(p))|
// > eps * d(p,q)} / mu(B(p,r)). The predicate is decided exactly per
// sample (df is converted to an exact rational); only the fraction and its
// interval are floating point.
DefectEstimate approx_diff_defect(const LipschitzField& f, const SpacePoint& p, double df,
                                  const BigRational& eps, const Dyadic& r,
                                  std::uint64_t nsamples, Rng& rng);

struct ChartIncrement {
    std::vector<double> delta;  // increment of the chart map, size = dim
    double dist;                // > 0, the distance the increment was read over
};

// min over unit vectors v of max over the last complete block of dim
// increments of |delta_i . v| / dist_i. dim = 1 is exact; dim = 2 scans
// 10^4 angles (the integrand is Lipschitz in the angle, bounding the grid
// error). Zero means some direction sees no increment growth, i.e. the
// block cannot pin a derivative against the chart.
double chart_uniqueness_lambda(const std::vector<ChartIncrement>& increments, unsigned dim);

struct WitnessCertificate {
    SpacePoint subject;        // the point the set is porous at
    SpacePoint witness;        // the nearby hole center
    Dyadic dist_to_set;        // d(witness, S)
    Dyadic dist_to_subject;    // d(witness, subject) > 0
    BigRational ratio;         // dist_to_set / dist_to_subject

    // Recompute both distances and the ratio from the stored points.
    bool verify(const SetDescriptor& s) const;
};

struct PorosityRow {
    Dyadic radius;
    BigRational best_ratio;    // 0 when no admissible witness was found
    std::optional<WitnessCertificate> best;
};

struct PorosityScanResult {
    std::vector<PorosityRow> rows;
    std::vector<WitnessCertificate> certificates;  // best witness per radius
};

// For each radius: search vertical offsets, mixed base-and-height moves,
// and `budget` random ball samples for the point maximizing
// d(x,S)/d(x,subject) among candidates with 0 < d(x,subject) < radius.
// Requires the subject on the set (distance zero).
PorosityScanResult porosity_scan(const SetDescriptor& s, const SpacePoint& subject,
                                 const std::vector<Dyadic>& radii, unsigned budget, Rng& rng);

// max over witnesses of |f(witness) - f(subject)| / d(witness, subject):
// an exact lower bound for the difference-quotient limsup of f at the
// subject. Requires a nonempty witness list.
BigRational nondiff_score(const LipschitzField& f, const SpacePoint& subject,
                          const std::vector<WitnessCertificate>& witnesses);

struct GammaResult {
    Dyadic gamma;              // best hole radius found (0 = nothing found)
    bool found = false;
    SpacePoint hole_center;    // meaningful when found
    Dyadic hole_radius;        // == gamma when found
    BigRational hole_measure;      // mu(B(hole_center, hole_radius))
    BigRational ambient_measure;   // mu(B(x, r))
};

// Lower bound for the largest s admitting a ball B(z,s) with
// d(x,z) + s <= r and mu(B(z,s)) <= delta * mu(B(x,r)): tries z = x and
// `budget` random centers, binary-searching s on a dyadic grid of
// 2^resolution_bits steps of its per-center maximum; every reported
// result is verified exactly.
GammaResult measure_porosity_gamma(const SpacePoint& x, const Dyadic& r,
                                   const BigRational& delta, unsigned budget, Rng& rng,
                                   unsigned resolution_bits = 10);

} // namespace jumplab
