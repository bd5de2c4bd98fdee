#include <jumplab/fields.hpp>

#include <sstream>

namespace jumplab {

Dyadic cone_value(const SpacePoint& apex, const SetDescriptor& hole, const SpacePoint& x) {
    const Dyadic clearance = distance_to_set(apex, hole);
    require(clearance.sign() > 0, "degenerate cone: apex lies in its set (distance zero)");
    const Dyadic value = clearance.scaled_pow2(-1) - jump_distance(apex, x);
    return value.sign() > 0 ? value : Dyadic(0);
}

Dyadic sup_cones(const std::vector<ConeSpec>& cones, const SpacePoint& x) {
    require(!cones.empty(), "sup of cones needs a nonempty family");
    Dyadic best = cone_value(cones.front().apex, cones.front().hole, x);
    for (std::size_t i = 1; i < cones.size(); ++i) {
        best = max(best, cone_value(cones[i].apex, cones[i].hole, x));
    }
    return best;
}

LipschitzField LipschitzField::height() { return LipschitzField(Kind{Height{}}); }

LipschitzField LipschitzField::constant(BigRational value) {
    return LipschitzField(Kind{Constant{std::move(value)}});
}

LipschitzField LipschitzField::distance_to(SpacePoint anchor) {
    validate_space_point(anchor);
    return LipschitzField(Kind{Distance{std::move(anchor)}});
}

LipschitzField LipschitzField::cone(SpacePoint apex, SetDescriptor hole) {
    validate_space_point(apex);
    require(distance_to_set(apex, hole).sign() > 0,
            "degenerate cone: apex lies in its set (distance zero)");
    return LipschitzField(Kind{Cone{std::move(apex), std::move(hole)}});
}

LipschitzField LipschitzField::sup_of_cones(std::vector<ConeSpec> cones) {
    require(!cones.empty(), "sup of cones needs a nonempty family");
    for (const auto& c : cones) {
        validate_space_point(c.apex);
        require(distance_to_set(c.apex, c.hole).sign() > 0,
                "degenerate cone: apex lies in its set (distance zero)");
    }
    return LipschitzField(Kind{SupCones{std::move(cones)}});
}

LipschitzField LipschitzField::affine(std::vector<std::pair<BigRational, LipschitzField>> terms) {
    Affine node;
    node.terms.reserve(terms.size());
    for (auto& [coeff, field] : terms) {
        node.terms.emplace_back(std::move(coeff),
                                std::make_shared<const LipschitzField>(std::move(field)));
    }
    return LipschitzField(Kind{std::move(node)});
}

BigRational LipschitzField::eval(const SpacePoint& p) const {
    struct Visitor {
        const SpacePoint& p;
        BigRational operator()(const Height&) const { return BigRational(p.height); }
        BigRational operator()(const Constant& c) const { return c.value; }
        BigRational operator()(const Distance& d) const {
            return BigRational(jump_distance(p, d.anchor));
        }
        BigRational operator()(const Cone& c) const {
            return BigRational(cone_value(c.apex, c.hole, p));
        }
        BigRational operator()(const SupCones& s) const {
            return BigRational(sup_cones(s.cones, p));
        }
        BigRational operator()(const Affine& a) const {
            BigRational sum;
            for (const auto& [coeff, field] : a.terms) sum += coeff * field->eval(p);
            return sum;
        }
    };
    return std::visit(Visitor{p}, kind_);
}

BigRational LipschitzField::lipschitz_bound() const {
    struct Visitor {
        BigRational operator()(const Height&) const { return BigRational(1); }
        BigRational operator()(const Constant&) const { return BigRational(0); }
        BigRational operator()(const Distance&) const { return BigRational(1); }
        BigRational operator()(const Cone&) const { return BigRational(1); }
        BigRational operator()(const SupCones&) const { return BigRational(1); }
        BigRational operator()(const Affine& a) const {
            BigRational sum;
            for (const auto& [coeff, field] : a.terms) sum += abs(coeff) * field->lipschitz_bound();
            return sum;
        }
    };
    return std::visit(Visitor{}, kind_);
}

std::string LipschitzField::describe() const {
    struct Visitor {
        std::string operator()(const Height&) const { return "height"; }
        std::string operator()(const Constant& c) const { return "const:" + c.value.str(); }
        std::string operator()(const Distance& d) const { return "dist:" + d.anchor.str(); }
        std::string operator()(const Cone& c) const {
            return "cone:" + c.apex.str() + "|" + set_to_string(c.hole);
        }
        std::string operator()(const SupCones& s) const {
            std::ostringstream out;
            out << "supcones:";
            for (std::size_t i = 0; i < s.cones.size(); ++i) {
                if (i) out << '+';
                out << s.cones[i].apex.str() << '|' << set_to_string(s.cones[i].hole);
            }
            return out.str();
        }
        std::string operator()(const Affine& a) const {
            std::ostringstream out;
            out << "affine(";
            for (std::size_t i = 0; i < a.terms.size(); ++i) {
                if (i) out << " + ";
                out << a.terms[i].first.str() << "*[" << a.terms[i].second->describe() << "]";
            }
            out << ")";
            return out.str();
        }
    };
    return std::visit(Visitor{}, kind_);
}

namespace {

ConeSpec parse_cone_spec(const std::string& text) {
    const auto bar = text.find('|');
    require(bar != std::string::npos,
            "cone spec must be \"apex|set\", got \"" + text + "\"");
    return ConeSpec{SpacePoint::parse(text.substr(0, bar)), parse_set(text.substr(bar + 1))};
}

} // namespace

LipschitzField LipschitzField::parse(const std::string& text) {
    if (text == "height") return height();
    const auto colon = text.find(':');
    require(colon != std::string::npos, "unknown field descriptor \"" + text + "\"");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    if (kind == "const") return constant(BigRational::parse(body));
    if (kind == "dist") return distance_to(SpacePoint::parse(body));
    if (kind == "cone") {
        auto spec = parse_cone_spec(body);
        return cone(std::move(spec.apex), std::move(spec.hole));
    }
    if (kind == "supcones") {
        // '+' separates cones ('; ' already separates points inside a set).
        std::vector<ConeSpec> cones;
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto plus = body.find('+', start);
            const std::string item =
                body.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            require(!item.empty(), "supcones descriptor has an empty entry");
            cones.push_back(parse_cone_spec(item));
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
        return sup_of_cones(std::move(cones));
    }
    throw precondition_error("unknown field kind \"" + kind +
                             "\" (expected height, const, dist, cone, or supcones)");
}

} // namespace jumplab
