#include <jumplab/base_space.hpp>

#include <sstream>

namespace jumplab {

std::string PointM::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    return os.str();
}

PointM PointM::parse(const std::string& text) {
    PointM p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            const unsigned long v = std::stoul(tok);
            require(v >= 1 && v <= 0xffffffffull, "point: coordinate out of range");
            p.coords.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
            throw precondition_error("point: cannot parse \"" + text + "\"");
        }
    }
    validate_point(p);
    return p;
}

void validate_point(const PointM& p) {
    require(!p.coords.empty(), "point: depth must be at least 1");
    require(p.depth() <= kMaxDepth, "point: depth exceeds supported maximum");
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        require(p.coords[i] >= 1 && p.coords[i] <= i + 1,
                "point: coordinate " + std::to_string(i + 1) + " must lie in 1.." +
                    std::to_string(i + 1));
    }
}

unsigned agreement_depth(const PointM& a, const PointM& b) {
    require(a.depth() == b.depth(), "points must share a truncation depth");
    unsigned k = 0;
    while (k < a.depth() && a.coords[k] == b.coords[k]) ++k;
    return k;
}

Dyadic base_distance(const PointM& a, const PointM& b) {
    const unsigned k = agreement_depth(a, b);
    if (k == a.depth()) return Dyadic(0);
    return unit_pow2(k + 1);
}

BigRational nu(unsigned k) {
    return BigRational::inverse_factorial(k);
}

bool Island::contains(const PointM& p) const {
    if (p.depth() != ambient_depth || level() > p.depth()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (p.coords[i] != prefix[i]) return false;
    }
    return true;
}

Island Island::around(const PointM& p, unsigned level) {
    require(level <= p.depth(), "island: level exceeds point depth");
    Island isl;
    isl.prefix.assign(p.coords.begin(), p.coords.begin() + level);
    isl.ambient_depth = p.depth();
    return isl;
}

void validate_island(const Island& island) {
    require(island.ambient_depth >= 1 && island.ambient_depth <= kMaxDepth,
            "island: ambient depth out of range");
    require(island.level() <= island.ambient_depth,
            "island: level exceeds ambient depth");
    for (std::size_t i = 0; i < island.prefix.size(); ++i) {
        require(island.prefix[i] >= 1 && island.prefix[i] <= i + 1,
                "island: prefix coordinate out of range");
    }
}

PointM random_point(unsigned depth, Rng& rng) {
    require(depth >= 1 && depth <= kMaxDepth, "random_point: bad depth");
    PointM p;
    p.coords.reserve(depth);
    for (unsigned i = 1; i <= depth; ++i) {
        p.coords.push_back(static_cast<std::uint32_t>(rng.range(1, i)));
    }
    return p;
}

PointM random_point_in_annulus(const PointM& x, unsigned k, Rng& rng) {
    validate_point(x);
    require(k >= 1 && k < x.depth(),
            "annulus: level must satisfy 1 <= k < depth");
    PointM p;
    p.coords.assign(x.coords.begin(), x.coords.begin() + k);
    // Coordinate k+1 ranges over {1..k+1} minus x's value: draw from k
    // choices and skip over the excluded one.
    std::uint32_t v = static_cast<std::uint32_t>(rng.range(1, k));
    if (v >= x.coords[k]) ++v;
    p.coords.push_back(v);
    for (unsigned i = k + 2; i <= x.depth(); ++i) {
        p.coords.push_back(static_cast<std::uint32_t>(rng.range(1, i)));
    }
    return p;
}

std::vector<PointM> enumerate_points(unsigned depth) {
    require(depth >= 1 && depth <= 5, "enumerate_points: oracle depth capped at 5");
    std::vector<PointM> out;
    PointM cur;
    cur.coords.assign(depth, 1);
    for (;;) {
        out.push_back(cur);
        // Odometer increment, coordinate i counting in {1..i+1}.
        std::size_t i = depth;
        while (i > 0) {
            --i;
            if (cur.coords[i] < i + 1) {
                ++cur.coords[i];
                for (std::size_t j = i + 1; j < depth; ++j) cur.coords[j] = 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

} // namespace jumplab
