#include "ribbon/family.hpp"

#include <sstream>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

bool even(int d) { return d % 2 == 0; }

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::RGC: return "rgc";
    case Family::ORGC: return "orgc";
    case Family::RGC1: return "rgc1";
    case Family::ORGC1: return "orgc1";
    case Family::MIXED: return "mixed";
    case Family::PCY: return "pcy";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    for (auto f : {Family::RGC, Family::ORGC, Family::RGC1, Family::ORGC1, Family::MIXED, Family::PCY})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

bool is_directed(Family f) { return f != Family::RGC && f != Family::RGC1; }

bool labels_boundaries(const FamilySpec& spec) {
    return (spec.family == Family::RGC || spec.family == Family::ORGC || spec.family == Family::MIXED) &&
           spec.m >= 2;
}

OrientationRule orientation_rule(const FamilySpec& spec) {
    OrientationRule r;
    const bool e = even(spec.d);
    switch (spec.family) {
    case Family::RGC:
    case Family::RGC1:
        if (e) r.edges = true;
        else r.black_vertices = r.signed_directions = true;
        break;
    case Family::ORGC:
    case Family::ORGC1:
        if (e) r.edges = true;
        else r.black_vertices = true;
        break;
    case Family::MIXED:
        if (e) r.black_vertices = true;
        else r.edges = r.white_vertices = true;
        break;
    case Family::PCY:
        if (e) r.edges = r.in_hairs = true;
        else r.black_vertices = r.out_hairs = r.in_hairs = true;
        break;
    }
    return r;
}

std::uint8_t family_tag(const FamilySpec& spec) {
    return static_cast<std::uint8_t>(static_cast<int>(spec.family) * 2 + (even(spec.d) ? 0 : 1));
}

void validate(const FamilySpec& spec) {
    if (spec.g < 0) throw RibbonError(ErrorCode::UnsupportedFamilyParam, "genus must be non-negative");
    if (spec.m < 1) throw RibbonError(ErrorCode::UnsupportedFamilyParam, "at least one boundary is required");
    if ((spec.family == Family::RGC1 || spec.family == Family::ORGC1) && spec.m != 1)
        throw RibbonError(ErrorCode::UnsupportedFamilyParam, "rgc1/orgc1 have exactly one boundary");
    if (spec.family == Family::PCY && (spec.p < 1 || spec.q < 1))
        throw RibbonError(ErrorCode::UnsupportedFamilyParam, "pcy graphs need an in-hair and an out-hair");
    if (spec.drop_passing && !is_directed(spec.family))
        throw RibbonError(ErrorCode::UnsupportedFamilyParam, "passing vertices only exist in quiver families");
    if (spec.edges && *spec.edges < 0) throw RibbonError(ErrorCode::UnsupportedFamilyParam, "negative edge count");
}

int degree_of(const FamilySpec& spec, const DecoratedGraph& g) {
    const int d = spec.d;
    const int e = count_internal_edges(g);
    const int black = count_vertices(g, VertexKind::Black);
    const int white = count_vertices(g, VertexKind::White);
    switch (spec.family) {
    case Family::MIXED:
        return (d + 1) * black + d * white - d * e;
    case Family::PCY:
        return d * black + (1 - d) * e + (2 - d) * count_vertices(g, VertexKind::OutHair) -
               count_vertices(g, VertexKind::InHair);
    default:
        return (1 - d) * e + d * (black + white) - d;
    }
}

int degree_for_edges(const FamilySpec& spec, int edges) {
    return edges - spec.d * (spec.euler() + 1);
}

std::optional<Support> support_for_degree(const FamilySpec& spec, int degree) {
    validate(spec);
    const int c = spec.euler();
    switch (spec.family) {
    case Family::PCY: {
        if (!spec.edges || !spec.vertices)
            throw RibbonError(ErrorCode::InfiniteDegreePiece, "pcy pieces need fixed vertex and edge counts");
        const int v = *spec.vertices, e = *spec.edges, d = spec.d;
        if (d * v + (1 - d) * e + (2 - d) * spec.p - spec.q != degree) return std::nullopt;
        return Support{v, e, degree};
    }
    case Family::MIXED: {
        if (!spec.edges)
            throw RibbonError(ErrorCode::InfiniteDegreePiece, "mixed pieces need a fixed edge count");
        const int e = *spec.edges, v = e - c;
        const int black = degree + spec.d * c;
        if (v < 1 || black < 0 || black > v || 2 * e < 2 * v + 1) return std::nullopt;
        return Support{v, e, degree};
    }
    default: {
        const int e = degree + spec.d * (c + 1);
        const int v = e - c;
        if (v < 1 || 2 * e < 2 * v + 1) return std::nullopt;
        return Support{v, e, degree};
    }
    }
}

std::vector<Support> enumerate_supports(const FamilySpec& spec, int max_edges) {
    validate(spec);
    std::vector<Support> out;
    const int c = spec.euler();
    if (spec.family == Family::PCY)
        throw RibbonError(ErrorCode::InfiniteDegreePiece, "pcy supports are indexed by hair and vertex counts");
    for (int e = std::max(1, c + 1); e <= max_edges; ++e) {
        const int v = e - c;
        if (v < 1) continue;
        if (spec.family == Family::MIXED) {
            for (int black = 0; black <= v; ++black) out.push_back({v, e, black - spec.d * c});
        } else {
            out.push_back({v, e, degree_for_edges(spec, e)});
        }
    }
    return out;
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << " d=" << spec.d << " g=" << spec.g << " m=" << spec.m;
    if (spec.edges) os << " E=" << *spec.edges;
    if (spec.vertices) os << " V=" << *spec.vertices;
    if (spec.family == Family::PCY) os << " p=" << spec.p << " q=" << spec.q;
    if (spec.drop_passing) os << " no-passing";
    return os.str();
}

}  // namespace ribbon
