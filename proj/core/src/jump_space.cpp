#include <jumplab/jump_space.hpp>

#include <algorithm>
#include <stdexcept>

namespace jumplab {

std::string SpacePoint::str() const {
    return base.str() + "@" + height.str();
}

SpacePoint SpacePoint::parse(const std::string& text) {
    const auto at = text.find('@');
    require(at != std::string::npos, "SpacePoint::parse: expected \"coords@height\", got \"" + text + "\"");
    require(text.find('@', at + 1) == std::string::npos,
            "SpacePoint::parse: more than one '@' in \"" + text + "\"");
    return SpacePoint{PointM::parse(text.substr(0, at)), Dyadic::parse(text.substr(at + 1))};
}

void validate_space_point(const SpacePoint& p) {
    validate_point(p.base);
    require(p.height.sign() >= 0 && p.height <= Dyadic(1),
            "space point height must lie in [0,1], got " + p.height.str());
}

Dyadic jump_distance(const SpacePoint& p, const SpacePoint& q) {
    const unsigned m = agreement_depth(p.base, q.base);
    const Dyadic gap = abs(p.height - q.height);
    if (m == p.depth()) return gap;  // same base: heights move freely

    // Distinct bases may exchange height at any point of the level-m grid.
    // If the grid meets [lo, hi] the detour is free; otherwise the cheapest
    // route goes out to the nearest grid point and back.
    const Dyadic& lo = min(p.height, q.height);
    const Dyadic& hi = max(p.height, q.height);
    const mpz_class floor_hi = hi.floor_scaled(m);
    const mpz_class ceil_lo = lo.ceil_scaled(m);
    if (floor_hi >= ceil_lo) return gap;

    const Dyadic below(hi.floor_scaled(m), m);  // == floor of lo too (no grid point between)
    const Dyadic above(lo.ceil_scaled(m), m);
    const Dyadic detour = min(lo - below, above - hi);
    return gap + detour.scaled_pow2(1);
}

Dyadic box_distance(const SpacePoint& p, const SpacePoint& q) {
    return max(base_distance(p.base, q.base), abs(p.height - q.height));
}

BigRational BallDecomposition::level_weight(unsigned k) const {
    const unsigned n = depth();
    require(k >= 1 && k < n, "level_weight: level must be in [1, depth)");
    return nu(k) - nu(k + 1);
}

BigRational BallDecomposition::total_measure() const {
    const unsigned n = depth();
    BigRational total;
    for (unsigned k = 1; k < n; ++k) {
        const Dyadic len = levels[k - 1].total_length();
        if (!len.is_zero()) total += level_weight(k) * BigRational(len);
    }
    total += nu(n) * BigRational(center_line.total_length());
    return total;
}

bool BallDecomposition::contains(const SpacePoint& q) const {
    const unsigned m = agreement_depth(center.base, q.base);
    require(m >= 1, "ball membership: first coordinates disagree (invalid point)");
    const Dyadic& s = q.height;
    if (m == depth()) {
        // Same base: the section is (t-r, t+r) before clipping; heights are
        // already confined to [0,1], so test against the unclipped window.
        return center.height - radius < s && s < center.height + radius;
    }
    for (const auto& [lo, hi] : raw_levels_[m - 1]) {
        if (lo < s && s < hi) return true;
    }
    return false;
}

BallDecomposition ball_decompose(const SpacePoint& center, const Dyadic& radius) {
    validate_space_point(center);
    require(radius.sign() > 0, "ball radius must be positive");

    const unsigned n = center.depth();
    const Dyadic& t = center.height;

    BallDecomposition out;
    out.center = center;
    out.radius = radius;
    out.levels.resize(n - 1);
    out.raw_levels_.resize(n - 1);

    for (unsigned k = 1; k < n; ++k) {
        for (const Dyadic& u : grid_window(k, t, radius)) {
            const Dyadic w = radius - abs(t - u);
            out.raw_levels_[k - 1].emplace_back(u - w, u + w);
            if (auto part = clip_to_unit(u - w, u + w)) {
                out.levels[k - 1].insert(part->first, part->second);
            }
        }
    }
    if (auto line = clip_to_unit(t - radius, t + radius)) {
        out.center_line.insert(line->first, line->second);
    }
    return out;
}

BigRational ball_measure(const SpacePoint& center, const Dyadic& radius) {
    return ball_decompose(center, radius).total_measure();
}

BigRational ball_measure_restricted(const SpacePoint& center, const Dyadic& radius,
                                    const IntervalUnion& excluded_heights) {
    const BallDecomposition ball = ball_decompose(center, radius);
    const unsigned n = ball.depth();
    BigRational total;
    for (unsigned k = 1; k < n; ++k) {
        const Dyadic kept =
            ball.levels[k - 1].total_length() - ball.levels[k - 1].intersection_length(excluded_heights);
        if (!kept.is_zero()) total += ball.level_weight(k) * BigRational(kept);
    }
    const Dyadic kept_line =
        ball.center_line.total_length() - ball.center_line.intersection_length(excluded_heights);
    total += nu(n) * BigRational(kept_line);
    return total;
}

namespace {

// Index of the stratum (0..n-2 = annulus levels 1..n-1, n-1 = center line)
// drawn with probability proportional to weighted section length. Exact:
// the weighted lengths are brought to a common denominator and a uniform
// big integer picks among the numerators.
std::size_t pick_stratum(const BallDecomposition& ball, Rng& rng) {
    const unsigned n = ball.depth();
    std::vector<BigRational> mass;
    mass.reserve(n);
    for (unsigned k = 1; k < n; ++k) {
        mass.push_back(ball.level_weight(k) * BigRational(ball.levels[k - 1].total_length()));
    }
    mass.push_back(nu(n) * BigRational(ball.center_line.total_length()));

    mpz_class den = 1;
    for (const auto& m : mass) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.denominator().get_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(mass.size());
    mpz_class total = 0;
    for (const auto& m : mass) {
        scaled.push_back(m.numerator() * (den / m.denominator()));
        total += scaled.back();
    }
    require(sgn(total) > 0, "sample_ball: ball has measure zero");

    mpz_class u = rng.below_big(total);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        if (u < scaled[i]) return i;
        u -= scaled[i];
    }
    throw std::logic_error("sample_ball: stratum selection fell off the end");
}

// A part of the union, chosen with probability proportional to length.
const IntervalUnion::Interval& pick_part(const IntervalUnion& section, Rng& rng) {
    const auto& parts = section.parts();
    if (parts.size() == 1) return parts.front();
    unsigned max_exp = 0;
    for (const auto& [lo, hi] : parts) max_exp = std::max(max_exp, (hi - lo).exponent());
    mpz_class total = 0;
    std::vector<mpz_class> scaled;
    scaled.reserve(parts.size());
    for (const auto& [lo, hi] : parts) {
        const Dyadic len = hi - lo;
        scaled.push_back(len.mantissa() << (max_exp - len.exponent()));
        total += scaled.back();
    }
    mpz_class u = rng.below_big(total);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        if (u < scaled[i]) return parts[i];
        u -= scaled[i];
    }
    throw std::logic_error("sample_ball: part selection fell off the end");
}

// Uniform dyadic strictly inside (lo, hi), at resolution 2^-bits or finer
// when the gap is narrower than a few grid steps.
Dyadic pick_height(const Dyadic& lo, const Dyadic& hi, unsigned bits, Rng& rng) {
    unsigned h = bits;
    for (;;) {
        const mpz_class first = lo.floor_scaled(h) + 1;
        const mpz_class last = hi.ceil_scaled(h) - 1;
        if (first <= last) {
            const mpz_class idx = first + rng.below_big(last - first + 1);
            return Dyadic(idx, h);
        }
        require(h < (1u << 20), "sample_ball: section too narrow for the height resolution");
        h += 8;
    }
}

} // namespace

SpacePoint sample_ball(const BallDecomposition& ball, Rng& rng, unsigned height_bits) {
    const unsigned n = ball.depth();
    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const std::size_t stratum = pick_stratum(ball, rng);
        const IntervalUnion& section =
            stratum + 1 == n ? ball.center_line : ball.levels[stratum];
        const auto& part = pick_part(section, rng);
        SpacePoint out;
        out.height = pick_height(part.first, part.second, height_bits, rng);
        out.base = stratum + 1 == n
                       ? ball.center.base
                       : random_point_in_annulus(ball.center.base, static_cast<unsigned>(stratum) + 1, rng);
        // A merged section can contain isolated seam points that lie on the
        // ball's boundary rather than inside it; redraw those.
        if (ball.contains(out)) return out;
    }
    throw std::runtime_error("sample_ball: exceeded redraw budget (radius near sampling resolution)");
}

SpacePoint sample_ball(const SpacePoint& center, const Dyadic& radius, Rng& rng,
                       unsigned height_bits) {
    const BallDecomposition ball = ball_decompose(center, radius);
    return sample_ball(ball, rng, height_bits);
}

} // namespace jumplab
