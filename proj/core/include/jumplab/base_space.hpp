#pragma once

// The branching base space at truncation depth N: points are sequences
// (a_1..a_N) with a_i in {1..i}, so coordinate i has i choices and the
// cylinder fixing the first k coordinates ("island of level k") carries
// measure 1/k!. Distance between distinct points is 1/2^(first differing
// index), an ultrametric. The truncation convention gives each single
// point the level-N island measure 1/N!.

#include <jumplab/dyadic.hpp>
#include <jumplab/rational.hpp>
#include <jumplab/rng.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace jumplab {

inline constexpr unsigned kDefaultDepth = 12;
inline constexpr unsigned kMaxDepth = 40;

struct PointM {
    std::vector<std::uint32_t> coords;  // coords[i] in {1..i+1}

    unsigned depth() const { return static_cast<unsigned>(coords.size()); }
    bool operator==(const PointM&) const = default;

    // "1,2,1,4"
    std::string str() const;
    static PointM parse(const std::string& text);
};

// Throws when coordinates are out of range or the depth is unsupported.
void validate_point(const PointM& p);

// Index of the first differing coordinate is k+1 where k is the count of
// leading agreements; equal points return the full depth.
unsigned agreement_depth(const PointM& a, const PointM& b);

// 1/2^(first differing index); 0 for equal points.
Dyadic base_distance(const PointM& a, const PointM& b);

// Island measure 1/k!.  k may be 0 (whole space).
BigRational nu(unsigned k);

struct Island {
    std::vector<std::uint32_t> prefix;  // first `level` coordinates
    unsigned ambient_depth = kDefaultDepth;

    unsigned level() const { return static_cast<unsigned>(prefix.size()); }
    BigRational measure() const { return nu(level()); }
    bool contains(const PointM& p) const;

    static Island around(const PointM& p, unsigned level);
    bool operator==(const Island&) const = default;
};

void validate_island(const Island& island);

// Uniform draw: coordinate i independent uniform on {1..i}.
PointM random_point(unsigned depth, Rng& rng);

// Uniform on the level-k annulus around x: agrees with x on exactly the
// first k coordinates (so coordinate k+1 differs). Requires 1 <= k < depth.
PointM random_point_in_annulus(const PointM& x, unsigned k, Rng& rng);

// Full enumeration; test oracle only, restricted to depth <= 5 (120 points).
std::vector<PointM> enumerate_points(unsigned depth);

} // namespace jumplab
