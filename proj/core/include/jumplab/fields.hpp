#pragma once

// Evaluable Lipschitz functions on the jump space, exact at every point:
// the height coordinate, constants, distance to a fixed point, cones over
// a set (a bump of height d(apex,S)/2 supported on the ball where the
// apex is closer than that), pointwise maxima of cones, and affine
// combinations. Each carries a certified Lipschitz bound.

#include <jumplab/dyadic.hpp>
#include <jumplab/jump_space.hpp>
#include <jumplab/rational.hpp>
#include <jumplab/sets.hpp>

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jumplab {

// max(d(apex, S)/2 - d(apex, x), 0) as a function of x: 1-Lipschitz,
// equal to d(apex,S)/2 at the apex, vanishing outside its ball. Requires
// the apex off the set (otherwise the cone is identically zero and its
// witness role degenerates).
Dyadic cone_value(const SpacePoint& apex, const SetDescriptor& hole, const SpacePoint& x);

struct ConeSpec {
    SpacePoint apex;
    SetDescriptor hole;
};

// max over the family; requires a nonempty family.
Dyadic sup_cones(const std::vector<ConeSpec>& cones, const SpacePoint& x);

class LipschitzField {
public:
    static LipschitzField height();
    static LipschitzField constant(BigRational value);
    static LipschitzField distance_to(SpacePoint anchor);
    static LipschitzField cone(SpacePoint apex, SetDescriptor hole);
    static LipschitzField sup_of_cones(std::vector<ConeSpec> cones);
    // sum of coefficient * field.
    static LipschitzField affine(std::vector<std::pair<BigRational, LipschitzField>> terms);

    BigRational eval(const SpacePoint& p) const;

    // A certified bound: |f(p) - f(q)| <= lipschitz_bound() * d(p, q).
    BigRational lipschitz_bound() const;

    // Wire syntax, e.g. "height", "const:3/4", "dist:1,1,1@3/8",
    // "cone:1,1,1@3/8|level:1/2", "supcones:<apex|set>+<apex|set>+...".
    // Affine combinations have no wire syntax (program-built only).
    std::string describe() const;
    static LipschitzField parse(const std::string& text);

private:
    struct Height {};
    struct Constant { BigRational value; };
    struct Distance { SpacePoint anchor; };
    struct Cone { SpacePoint apex; SetDescriptor hole; };
    struct SupCones { std::vector<ConeSpec> cones; };
    struct Affine {
        std::vector<std::pair<BigRational, std::shared_ptr<const LipschitzField>>> terms;
    };
    using Kind = std::variant<Height, Constant, Distance, Cone, SupCones, Affine>;

    explicit LipschitzField(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

} // namespace jumplab
