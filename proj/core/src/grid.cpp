#include <jumplab/grid.hpp>

namespace jumplab {

namespace {
void check_height(const Dyadic& t) {
    require(Dyadic(0) <= t && t <= Dyadic(1), "grid: height must lie in [0,1]");
}
} // namespace

GridDistance grid_distance(const Dyadic& t, unsigned k) {
    check_height(t);
    const mpz_class n = t.floor_scaled(k);
    const Dyadic below(n, k);
    if (below == t) return {Dyadic(0), below};
    // n+1 stays within [0, 2^k] because t <= 1 and t is not on the grid here.
    const Dyadic above(n + 1, k);
    const Dyadic d_below = t - below;
    const Dyadic d_above = above - t;
    if (d_above < d_below) return {d_above, above};
    return {d_below, below};  // ties toward the smaller point
}

std::vector<Dyadic> grid_window(unsigned k, const Dyadic& t, const Dyadic& r) {
    check_height(t);
    require(r > Dyadic(0), "grid: window radius must be positive");
    const Dyadic lo = t - r;
    const Dyadic hi = t + r;
    // Strict inequality on both sides: n/2^k > lo and n/2^k < hi.
    mpz_class n_lo = lo.floor_scaled(k) + 1;
    mpz_class n_hi = hi.ceil_scaled(k) - 1;
    if (n_lo < 0) n_lo = 0;
    mpz_class cap = mpz_class(1) << k;
    if (n_hi > cap) n_hi = cap;
    std::vector<Dyadic> out;
    if (n_hi < n_lo) return out;
    const mpz_class count = n_hi - n_lo + 1;
    require(count <= (1 << 22), "grid: window enumerates too many points");
    out.reserve(count.get_ui());
    for (mpz_class n = n_lo; n <= n_hi; ++n) out.emplace_back(n, k);
    return out;
}

} // namespace jumplab
