#include <jumplab/analysis.hpp>

#include <jumplab/grid.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace jumplab {

bool is_in_Ek(const Dyadic& t, unsigned k) {
    return grid_distance(t, k).distance >= unit_pow2(k + 2);
}

BigRational doubling_ratio(const SpacePoint& center, const Dyadic& r, const Dyadic& C) {
    require(C >= Dyadic(1), "growth factor must be at least 1");
    const BigRational inner = ball_measure(center, r);
    if (C == Dyadic(1)) return BigRational(1);
    return ball_measure(center, C * r) / inner;
}

std::vector<NonDoublingRow> non_doubling_scan(const PointM& x, const Dyadic& t,
                                              const std::vector<unsigned>& levels) {
    const SpacePoint center{x, t};
    validate_space_point(center);
    std::vector<NonDoublingRow> rows;
    rows.reserve(levels.size());
    for (const unsigned n : levels) {
        NonDoublingRow row;
        row.level = n;
        row.lower_bound = BigRational(2 * (static_cast<long>(n) + 1));
        if (!is_in_Ek(t, n)) {
            row.skip_reason = "height is within 1/2^" + std::to_string(n + 2) +
                              " of the level-" + std::to_string(n) + " grid";
            rows.push_back(std::move(row));
            continue;
        }
        row.valid = true;
        row.ratio = ball_measure(center, unit_pow2(n)) / ball_measure(center, unit_pow2(n + 2));
        row.bound_satisfied = row.ratio >= row.lower_bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

double vertical_derivative(const LipschitzField& f, const SpacePoint& p,
                           const BigRational& tol, unsigned max_level) {
    validate_space_point(p);
    require(tol.sign() > 0, "derivative tolerance must be positive");
    require(p.height.sign() > 0 && p.height < Dyadic(1),
            "vertical derivative needs a height strictly inside (0,1)");

    const Dyadic head_room = min(p.height, Dyadic(1) - p.height);
    unsigned j = 1;
    while (unit_pow2(j) >= head_room) {
        require(j < max_level, "vertical derivative: height too close to the boundary");
        ++j;
    }

    const auto quotient = [&](unsigned level) {
        const Dyadic u = unit_pow2(level);
        const BigRational up = f.eval(SpacePoint{p.base, p.height + u});
        const BigRational down = f.eval(SpacePoint{p.base, p.height - u});
        return (up - down) / BigRational(u.scaled_pow2(1));
    };

    BigRational prev = quotient(j);
    for (++j; j <= max_level; ++j) {
        const BigRational cur = quotient(j);
        if (abs(cur - prev) < tol) return cur.to_double();
        prev = cur;
    }
    throw no_stable_limit("vertical difference quotients did not settle by level 2^-" +
                          std::to_string(max_level));
}

namespace {

// 95% Wilson score interval for a binomial proportion.
void wilson_interval(std::uint64_t hits, std::uint64_t n, double& lo, double& hi) {
    constexpr double z = 1.959963984540054;
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(hits) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

} // namespace

DefectEstimate approx_diff_defect(const LipschitzField& f, const SpacePoint& p, double df,
                                  const BigRational& eps, const Dyadic& r,
                                  std::uint64_t nsamples, Rng& rng) {
    require(eps.sign() > 0, "defect threshold must be positive");
    require(nsamples >= 1, "defect estimate needs at least one sample");
    const BigRational df_exact = rational_from_double(df);
    const BallDecomposition ball = ball_decompose(p, r);
    const BigRational f_at_p = f.eval(p);

    DefectEstimate out;
    out.samples = nsamples;
    for (std::uint64_t i = 0; i < nsamples; ++i) {
        const SpacePoint q = sample_ball(ball, rng);
        const BigRational deviation =
            abs(f.eval(q) - f_at_p - df_exact * BigRational(q.height - p.height));
        const BigRational allowance = eps * BigRational(jump_distance(p, q));
        if (deviation > allowance) ++out.exceed_count;
    }
    out.fraction = static_cast<double>(out.exceed_count) / static_cast<double>(nsamples);
    wilson_interval(out.exceed_count, out.samples, out.ci_low, out.ci_high);
    return out;
}

double chart_uniqueness_lambda(const std::vector<ChartIncrement>& increments, unsigned dim) {
    require(dim == 1 || dim == 2, "chart dimension must be 1 or 2");
    require(increments.size() >= dim,
            "need at least one complete block of " + std::to_string(dim) + " increments");
    for (const auto& inc : increments) {
        require(inc.delta.size() == dim, "increment dimension mismatch");
        require(std::isfinite(inc.dist) && inc.dist > 0.0,
                "increment distances must be positive");
        for (const double v : inc.delta) {
            require(std::isfinite(v), "increment components must be finite");
        }
    }

    const std::size_t blocks = increments.size() / dim;
    const std::size_t start = (blocks - 1) * dim;

    if (dim == 1) {
        // A block is a single increment; the unit "vectors" are just signs.
        return std::fabs(increments[start].delta[0]) / increments[start].dist;
    }

    // v and -v give the same value, so half the circle suffices.
    constexpr int kAngles = 10000;
    const double pi = std::acos(-1.0);
    double lambda = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kAngles; ++i) {
        const double theta = pi * static_cast<double>(i) / kAngles;
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        double worst = 0.0;
        for (std::size_t b = start; b < start + dim; ++b) {
            const double proj =
                std::fabs(increments[b].delta[0] * c + increments[b].delta[1] * s) /
                increments[b].dist;
            worst = std::max(worst, proj);
        }
        lambda = std::min(lambda, worst);
    }
    return lambda;
}

bool WitnessCertificate::verify(const SetDescriptor& s) const {
    if (jump_distance(witness, subject) != dist_to_subject) return false;
    if (distance_to_set(witness, s) != dist_to_set) return false;
    if (dist_to_subject.sign() <= 0) return false;
    return ratio == BigRational(dist_to_set) / BigRational(dist_to_subject);
}

PorosityScanResult porosity_scan(const SetDescriptor& s, const SpacePoint& subject,
                                 const std::vector<Dyadic>& radii, unsigned budget, Rng& rng) {
    validate_space_point(subject);
    require(distance_to_set(subject, s).is_zero(),
            "porosity subject must lie on the set (distance zero)");

    const unsigned n = subject.depth();
    PorosityScanResult out;
    for (const Dyadic& r : radii) {
        require(r.sign() > 0, "porosity radii must be positive");

        std::vector<SpacePoint> candidates;
        // Vertical offsets at dyadic fractions of r.
        for (unsigned j = 1; j <= 6; ++j) {
            const Dyadic delta = r.scaled_pow2(-static_cast<long>(j));
            for (const Dyadic& h : {subject.height + delta, subject.height - delta}) {
                if (h.sign() >= 0 && h <= Dyadic(1)) {
                    candidates.push_back(SpacePoint{subject.base, h});
                }
            }
        }
        // Mixed moves: change the base at each level, nudge the height.
        const Dyadic half = r.scaled_pow2(-1);
        for (unsigned k = 1; k < n; ++k) {
            const PointM y = random_point_in_annulus(subject.base, k, rng);
            for (const Dyadic& h :
                 {subject.height, subject.height + half, subject.height - half}) {
                if (h.sign() >= 0 && h <= Dyadic(1)) candidates.push_back(SpacePoint{y, h});
            }
        }
        // Random draws from the ball.
        for (unsigned i = 0; i < budget; ++i) {
            candidates.push_back(sample_ball(subject, r, rng));
        }

        PorosityRow row;
        row.radius = r;
        row.best_ratio = BigRational(0);
        for (const auto& c : candidates) {
            const Dyadic to_subject = jump_distance(c, subject);
            if (to_subject.sign() <= 0 || to_subject >= r) continue;
            const Dyadic to_set = distance_to_set(c, s);
            BigRational ratio = BigRational(to_set) / BigRational(to_subject);
            if (!row.best || ratio > row.best_ratio) {
                row.best_ratio = ratio;
                row.best = WitnessCertificate{subject, c, to_set, to_subject, std::move(ratio)};
            }
        }
        if (row.best) out.certificates.push_back(*row.best);
        out.rows.push_back(std::move(row));
    }
    return out;
}

BigRational nondiff_score(const LipschitzField& f, const SpacePoint& subject,
                          const std::vector<WitnessCertificate>& witnesses) {
    require(!witnesses.empty(), "nondiff score needs at least one witness");
    const BigRational at_subject = f.eval(subject);
    BigRational best(0);
    bool first = true;
    for (const auto& w : witnesses) {
        const Dyadic d = jump_distance(w.witness, subject);
        require(d.sign() > 0, "witness at pseudodistance zero from the subject");
        const BigRational score = abs(f.eval(w.witness) - at_subject) / BigRational(d);
        if (first || score > best) {
            best = score;
            first = false;
        }
    }
    return best;
}

GammaResult measure_porosity_gamma(const SpacePoint& x, const Dyadic& r,
                                   const BigRational& delta, unsigned budget, Rng& rng,
                                   unsigned resolution_bits) {
    validate_space_point(x);
    require(r.sign() > 0, "gamma radius must be positive");
    require(delta.sign() > 0, "gamma delta must be positive");
    require(resolution_bits >= 1 && resolution_bits <= 24,
            "gamma resolution must be between 1 and 24 bits");

    GammaResult out;
    out.ambient_measure = ball_measure(x, r);
    const BigRational threshold = delta * out.ambient_measure;
    const long steps = 1L << resolution_bits;

    const auto try_center = [&](const SpacePoint& z) {
        const Dyadic dz = jump_distance(x, z);
        const Dyadic s_max = r - dz;
        if (s_max.sign() <= 0) return;
        const Dyadic step = s_max.scaled_pow2(-static_cast<long>(resolution_bits));
        // Largest grid multiple of s_max/2^bits whose ball stays small;
        // measure is monotone in s, so binary search.
        long lo = 1, hi = steps, best = 0;
        BigRational best_measure;
        while (lo <= hi) {
            const long mid = lo + (hi - lo) / 2;
            const Dyadic s = step * Dyadic(mid);
            const BigRational m = ball_measure(z, s);
            if (m <= threshold) {
                best = mid;
                best_measure = m;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        if (best == 0) return;
        const Dyadic s = step * Dyadic(best);
        if (!out.found || out.gamma < s) {
            out.found = true;
            out.gamma = s;
            out.hole_center = z;
            out.hole_radius = s;
            out.hole_measure = best_measure;
        }
    };

    try_center(x);
    for (unsigned i = 0; i < budget; ++i) {
        try_center(sample_ball(x, r, rng));
    }
    return out;
}

} // namespace jumplab
