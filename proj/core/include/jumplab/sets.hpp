#pragma once

// Describable subsets of the jump space with exactly computable distance:
// the level set of the height coordinate (all of M at one height) and
// finite point sets. These are the hole-carrying sets the porosity and
// cone machinery works against.

#include <jumplab/dyadic.hpp>
#include <jumplab/jump_space.hpp>

#include <string>
#include <variant>
#include <vector>

namespace jumplab {

// M x {height}: every base at one fixed height.
struct JumpLevel {
    Dyadic height;
};

struct FinitePointSet {
    std::vector<SpacePoint> points;
};

using SetDescriptor = std::variant<JumpLevel, FinitePointSet>;

// Throws on heights outside [0,1], invalid member points, or an empty
// point list.
void validate_set(const SetDescriptor& s);

// Exact distance from p to the set. For a level set this is |t - height|:
// the vertical move to (x, height) attains the lower bound d >= |Δt|.
// For a point set, the minimum of jump_distance over members.
Dyadic distance_to_set(const SpacePoint& p, const SetDescriptor& s);

// "level:1/2" or "points:1,1,1@1/4;1,2,1@3/8" (the wire syntax the CLI
// and reports use).
std::string set_to_string(const SetDescriptor& s);
SetDescriptor parse_set(const std::string& text);

} // namespace jumplab
