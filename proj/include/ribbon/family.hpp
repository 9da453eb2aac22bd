#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/decorated.hpp"

namespace ribbon {

// RGC/ORGC: labeled boundaries, arbitrary (g,m).  RGC1/ORGC1: one boundary,
// the genus-graded pieces of rgc and orgc.  MIXED: two-colored quivers with
// white sinks.  PCY: haired ribbon quivers.
enum class Family : std::uint8_t { RGC, ORGC, RGC1, ORGC1, MIXED, PCY };

struct FamilySpec {
    Family family = Family::RGC;
    int d = 2;
    int g = 0;
    int m = 1;
    std::optional<int> edges;     // required where degree does not pin the edge count
    std::optional<int> vertices;  // PCY only
    int p = 0;                    // PCY out-hairs
    int q = 0;                    // PCY in-hairs
    bool drop_passing = false;    // quiver families: omit graphs with a passing vertex

    int euler() const { return 2 * g - 2 + m; }  // E - V
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

bool is_directed(Family f);
bool labels_boundaries(const FamilySpec& spec);
OrientationRule orientation_rule(const FamilySpec& spec);
std::uint8_t family_tag(const FamilySpec& spec);

// Throws UnsupportedFamilyParam for inconsistent parameters.
void validate(const FamilySpec& spec);

int degree_of(const FamilySpec& spec, const DecoratedGraph& g);

struct Support {
    int vertices;
    int edges;
    int degree;
    friend bool operator==(const Support&, const Support&) = default;
};

// The (V,E) piece in a degree.  Throws InfiniteDegreePiece when degree does
// not pin it.
std::optional<Support> support_for_degree(const FamilySpec& spec, int degree);
std::vector<Support> enumerate_supports(const FamilySpec& spec, int max_edges);
int degree_for_edges(const FamilySpec& spec, int edges);

std::string describe(const FamilySpec& spec);

}  // namespace ribbon
