#include <jumplab/sets.hpp>

#include <sstream>

namespace jumplab {

void validate_set(const SetDescriptor& s) {
    if (const auto* level = std::get_if<JumpLevel>(&s)) {
        require(level->height.sign() >= 0 && level->height <= Dyadic(1),
                "level set height must lie in [0,1], got " + level->height.str());
        return;
    }
    const auto& pts = std::get<FinitePointSet>(s).points;
    require(!pts.empty(), "point set must be nonempty");
    for (const auto& p : pts) validate_space_point(p);
}

Dyadic distance_to_set(const SpacePoint& p, const SetDescriptor& s) {
    validate_set(s);
    if (const auto* level = std::get_if<JumpLevel>(&s)) {
        return abs(p.height - level->height);
    }
    const auto& pts = std::get<FinitePointSet>(s).points;
    Dyadic best = jump_distance(p, pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        best = min(best, jump_distance(p, pts[i]));
    }
    return best;
}

std::string set_to_string(const SetDescriptor& s) {
    if (const auto* level = std::get_if<JumpLevel>(&s)) {
        return "level:" + level->height.str();
    }
    std::ostringstream out;
    out << "points:";
    const auto& pts = std::get<FinitePointSet>(s).points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ';';
        out << pts[i].str();
    }
    return out.str();
}

SetDescriptor parse_set(const std::string& text) {
    const auto colon = text.find(':');
    require(colon != std::string::npos,
            "set descriptor must be \"level:<height>\" or \"points:<p;...>\", got \"" + text + "\"");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    if (kind == "level") {
        return JumpLevel{Dyadic::parse(body)};
    }
    if (kind == "points") {
        FinitePointSet set;
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto semi = body.find(';', start);
            const std::string item =
                body.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            require(!item.empty(), "set descriptor has an empty point entry");
            set.points.push_back(SpacePoint::parse(item));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        require(!set.points.empty(), "point set descriptor is empty");
        return set;
    }
    throw precondition_error("unknown set kind \"" + kind + "\" (expected level or points)");
}

} // namespace jumplab
