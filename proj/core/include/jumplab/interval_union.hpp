#pragma once

// Finite unions of bounded open intervals with exact dyadic endpoints.
// Kept sorted and disjoint; intervals that touch are merged on insert
// (total length is unchanged by that, which is all the measure code needs).

#include <jumplab/dyadic.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace jumplab {

class IntervalUnion {
public:
    using Interval = std::pair<Dyadic, Dyadic>;

    IntervalUnion() = default;

    // Insert (left, right); requires left < right.
    void insert(const Dyadic& left, const Dyadic& right);

    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    const std::vector<Interval>& parts() const { return parts_; }

    Dyadic total_length() const;

    // Strict interior membership. Points where two inserted intervals
    // touched are treated as covered (they were merged); the callers that
    // care re-verify with an exact metric test.
    bool contains(const Dyadic& x) const;

    // This set intersected with the open interval (left, right).
    IntervalUnion intersect(const Dyadic& left, const Dyadic& right) const;
    IntervalUnion intersect(const IntervalUnion& other) const;

    Dyadic intersection_length(const IntervalUnion& other) const;

    // True iff (left, right) minus the merge points is inside this union,
    // i.e. some stored part spans [left, right].
    bool covers(const Dyadic& left, const Dyadic& right) const;

private:
    std::vector<Interval> parts_;
};

// The total-length operation on a list of raw intervals; validates each
// (left < right) and returns the exact measure of the union.
Dyadic interval_union_length(const std::vector<IntervalUnion::Interval>& intervals);

// (left, right) clipped to [0,1]; empty result when nothing remains.
std::optional<IntervalUnion::Interval> clip_to_unit(const Dyadic& left, const Dyadic& right);

} // namespace jumplab
