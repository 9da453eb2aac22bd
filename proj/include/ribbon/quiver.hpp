#pragma once

#include <cstdint>
#include <vector>

#include "ribbon/decorated.hpp"

namespace ribbon {

using Directions = std::vector<std::uint8_t>;  // tail flag per half-edge

bool is_acyclic(const RibbonGraph& g, const Directions& tail);

// All acyclic orientations of the edges.  A loop admits none.
std::vector<Directions> acyclic_orientations(const RibbonGraph& g);

// A passing vertex is bivalent with one incoming and one outgoing edge.
bool has_passing_vertex(const DecoratedGraph& g);

// Vertices with no outgoing internal edge.
std::vector<int> sinks(const DecoratedGraph& g);

// Source half-edge ids, one per edge, edges ordered by least half-edge.
std::vector<int> source_list(const RibbonGraph& g, const Directions& tail);
Directions directions_from_sources(const RibbonGraph& g, const std::vector<int>& sources);

}  // namespace ribbon
