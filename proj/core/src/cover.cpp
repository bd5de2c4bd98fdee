#include <jumplab/cover.hpp>

#include <jumplab/grid.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

namespace jumplab {

BigRational Rectangle::measure() const {
    const auto part = clip_to_unit(center - half_width, center + half_width);
    if (!part) return BigRational(0);
    return nu(level()) * BigRational(part->second - part->first);
}

void validate_rectangle(const Rectangle& r) {
    validate_island(r.island);
    require(r.half_width.sign() > 0, "rectangle half width must be positive");
    require(r.center.sign() >= 0 && r.center <= Dyadic(1),
            "rectangle center height must lie in [0,1]");
    if (r.level() < r.island.ambient_depth) {
        require(r.center.is_integer_scaled(r.level()),
                "rectangle center must sit on the grid of its island level");
    }
}

namespace {

struct ZonePoint {
    unsigned level;
    Dyadic at;
};

// The grid point in [lo, hi) at the smallest level below level_cap, if a
// grid meets that zone at all. Minimality makes the point unique.
std::optional<ZonePoint> coarsest_in_upper(const Dyadic& lo, const Dyadic& hi, unsigned level_cap) {
    for (unsigned k = 1; k < level_cap; ++k) {
        const mpz_class first = lo.ceil_scaled(k);
        const mpz_class last = hi.is_integer_scaled(k) ? hi.floor_scaled(k) - 1 : hi.floor_scaled(k);
        if (first <= last) {
            if (first != last) {
                throw std::logic_error("rectangle_cover: upper zone grid point not unique");
            }
            return ZonePoint{k, Dyadic(first, k)};
        }
    }
    return std::nullopt;
}

// Same for (lo, hi]; the unique point is the largest index.
std::optional<ZonePoint> coarsest_in_lower(const Dyadic& lo, const Dyadic& hi, unsigned level_cap) {
    for (unsigned k = 1; k < level_cap; ++k) {
        const mpz_class last = hi.floor_scaled(k);
        const mpz_class first = lo.is_integer_scaled(k) ? lo.ceil_scaled(k) + 1 : lo.ceil_scaled(k);
        if (first <= last) {
            if (first != last) {
                throw std::logic_error("rectangle_cover: lower zone grid point not unique");
            }
            return ZonePoint{k, Dyadic(last, k)};
        }
    }
    return std::nullopt;
}

} // namespace

CoverResult rectangle_cover(const SpacePoint& center, const Dyadic& radius,
                            const BigRational& epsilon) {
    validate_space_point(center);
    require(radius.sign() > 0, "cover radius must be positive");
    require(epsilon.sign() > 0, "cover epsilon must be positive");

    const unsigned n = center.depth();
    const Dyadic& t = center.height;

    if (reduced_level(t) < n) {
        throw precondition_error(
            "cover center height " + t.str() + " lies on a grid the ball can see (level " +
            std::to_string(reduced_level(t)) + " < depth " + std::to_string(n) + ")");
    }
    if (t - radius < Dyadic(0) || Dyadic(1) < t + radius) {
        throw precondition_error("cover window (t-r, t+r) must stay inside [0,1]");
    }
    const BigRational half_eps = epsilon / BigRational(2);
    for (unsigned k = 1; k < n; ++k) {
        if (distance_to_grid(t, k) < radius && BigRational(1, k + 1) >= half_eps) {
            throw precondition_error(
                "level " + std::to_string(k) + " grid meets the window but its island measure ratio 1/" +
                std::to_string(k + 1) + " is not below epsilon/2");
        }
    }

    const Dyadic half_r = radius.scaled_pow2(-1);
    unsigned k1 = n;
    for (unsigned k = 1; k < n; ++k) {
        if (distance_to_grid(t, k) < half_r) {
            k1 = k;
            break;
        }
    }

    CoverResult out;
    out.k1 = k1;
    if (k1 == n) {
        // No grid near the center: the center line rectangle takes the role
        // of the innermost cover piece.
        out.rectangles.push_back(Rectangle{Island::around(center.base, n), t, radius});
    } else {
        const auto window = grid_window(k1, t, half_r);
        if (window.size() != 1) {
            throw std::logic_error("rectangle_cover: central grid point not unique");
        }
        const Dyadic& t1 = window.front();
        out.rectangles.push_back(
            Rectangle{Island::around(center.base, k1), t1, radius - abs(t - t1)});
    }
    if (const auto up = coarsest_in_upper(t + half_r, t + radius, k1)) {
        out.rectangles.push_back(
            Rectangle{Island::around(center.base, up->level), up->at, radius - abs(t - up->at)});
    }
    if (const auto down = coarsest_in_lower(t - radius, t - half_r, k1)) {
        out.rectangles.push_back(
            Rectangle{Island::around(center.base, down->level), down->at, radius - abs(t - down->at)});
    }

    // Exact measure of the union: at agreement depth m the union's height
    // section collects every rectangle of level <= m.
    out.ball_measure = ball_measure(center, radius);
    for (unsigned m = 1; m <= n; ++m) {
        IntervalUnion section;
        for (const auto& rect : out.rectangles) {
            if (rect.level() > m) continue;
            if (auto part = clip_to_unit(rect.center - rect.half_width, rect.center + rect.half_width)) {
                section.insert(part->first, part->second);
            }
        }
        if (section.empty()) continue;
        const BigRational weight = m < n ? nu(m) - nu(m + 1) : nu(n);
        out.covered_measure += weight * BigRational(section.total_length());
    }
    out.uncovered_fraction = (out.ball_measure - out.covered_measure) / out.ball_measure;
    return out;
}

} // namespace jumplab
