#include <jumplab/interval_union.hpp>

#include <algorithm>

namespace jumplab {

void IntervalUnion::insert(const Dyadic& left, const Dyadic& right) {
    require(left < right, "interval: left endpoint must be below right");
    auto it = std::lower_bound(
        parts_.begin(), parts_.end(), left,
        [](const Interval& iv, const Dyadic& v) { return iv.first < v; });
    // Step back if the previous part reaches `left`.
    if (it != parts_.begin() && std::prev(it)->second >= left) --it;
    Dyadic lo = left, hi = right;
    auto erase_from = it;
    while (it != parts_.end() && it->first <= hi) {
        lo = min(lo, it->first);
        hi = max(hi, it->second);
        ++it;
    }
    const auto pos = parts_.erase(erase_from, it);
    parts_.insert(pos, {lo, hi});
}

Dyadic IntervalUnion::total_length() const {
    Dyadic sum;
    for (const auto& [l, r] : parts_) sum += r - l;
    return sum;
}

bool IntervalUnion::contains(const Dyadic& x) const {
    auto it = std::upper_bound(
        parts_.begin(), parts_.end(), x,
        [](const Dyadic& v, const Interval& iv) { return v < iv.first; });
    if (it == parts_.begin()) return false;
    --it;
    return it->first < x && x < it->second;
}

IntervalUnion IntervalUnion::intersect(const Dyadic& left, const Dyadic& right) const {
    IntervalUnion out;
    for (const auto& [l, r] : parts_) {
        const Dyadic& lo = max(l, left);
        const Dyadic& hi = min(r, right);
        if (lo < hi) out.insert(lo, hi);
    }
    return out;
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    IntervalUnion out;
    auto a = parts_.begin();
    auto b = other.parts_.begin();
    while (a != parts_.end() && b != other.parts_.end()) {
        const Dyadic& lo = max(a->first, b->first);
        const Dyadic& hi = min(a->second, b->second);
        if (lo < hi) out.insert(lo, hi);
        if (a->second < b->second) ++a; else ++b;
    }
    return out;
}

Dyadic IntervalUnion::intersection_length(const IntervalUnion& other) const {
    return intersect(other).total_length();
}

bool IntervalUnion::covers(const Dyadic& left, const Dyadic& right) const {
    if (!(left < right)) return true;
    for (const auto& [l, r] : parts_) {
        if (l <= left && right <= r) return true;
    }
    return false;
}

Dyadic interval_union_length(const std::vector<IntervalUnion::Interval>& intervals) {
    IntervalUnion u;
    for (const auto& [l, r] : intervals) u.insert(l, r);
    return u.total_length();
}

std::optional<IntervalUnion::Interval> clip_to_unit(const Dyadic& left, const Dyadic& right) {
    const Dyadic lo = max(left, Dyadic(0));
    const Dyadic hi = min(right, Dyadic(1));
    if (lo < hi) return IntervalUnion::Interval{lo, hi};
    return std::nullopt;
}

} // namespace jumplab
