#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/decorated.hpp"

namespace ribbon {

// Canonical labeling of a connected decorated ribbon graph.  An isomorphism
// of connected ribbon graphs is fixed by the image of one half-edge, so each
// candidate start half-edge determines a breadth-first relabeling; the
// lexicographically least code wins and the starts reaching it are exactly
// the automorphisms.
struct CanonicalForm {
    std::string key;
    std::vector<int> relabel;  // input half-edge -> canonical half-edge
    int sign = 1;              // input orientation = sign * reference orientation of the representative
    bool is_zero = false;      // some automorphism reverses the orientation
    int automorphisms = 1;
};

struct GraphClass {
    std::string canonical_key;
    int sign = 1;
    bool is_zero = false;
};

CanonicalForm canonical_form(const OrientedGraph& og, std::uint8_t family_tag);

// Canonical representative carrying the reference orientation.
OrientedGraph canonical_representative(const OrientedGraph& og, const CanonicalForm& cf,
                                       const OrientationRule& rule);

GraphClass canonical_class(const OrientedGraph& og, std::uint8_t family_tag);

// Sign of an orientation relative to another over the same items.
int orientation_sign(const RibbonGraph& g, const Orientation& a, const Orientation& b);

}  // namespace ribbon
