#pragma once

// The nested height grids: level k consists of the multiples of 1/2^k
// inside [0,1]. Level k+1 refines level k.

#include <jumplab/dyadic.hpp>

#include <vector>

namespace jumplab {

struct GridDistance {
    Dyadic distance;
    Dyadic nearest;  // ties resolved toward the smaller grid point
};

// Nearest level-k grid point to t in [0,1].
GridDistance grid_distance(const Dyadic& t, unsigned k);

// All level-k grid points u with |t - u| < r (strict), ascending.
std::vector<Dyadic> grid_window(unsigned k, const Dyadic& t, const Dyadic& r);

// Exact reduced level of a dyadic in [0,1]: the smallest k with t on the
// level-k grid. Canonical form makes this the stored exponent.
inline unsigned reduced_level(const Dyadic& t) { return t.exponent(); }

// dist(t, level-k grid) without materializing the point.
inline Dyadic distance_to_grid(const Dyadic& t, unsigned k) {
    return grid_distance(t, k).distance;
}

} // namespace jumplab
