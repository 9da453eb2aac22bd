#pragma once

#include "ribbon/chain_vector.hpp"
#include "ribbon/family.hpp"

namespace ribbon {

// Split vertex v: piece A takes the len half-edges of v starting at cyclic
// position start, piece B the rest.  The new edge joins half-edge n (on A)
// to n+1 (on B).  Decorations other than directions of the new edge are
// filled in; the orientation is copied unchanged.
OrientedGraph split_raw(const OrientedGraph& og, int v, int start, int len);

// Index of the vertex item naming vertex v, or -1.
int vertex_item_index(const OrientedGraph& og, int v);

// Vertex-splitting differential of RGC, ORGC, RGC1, ORGC1.
ChainVector split_vertex_terms(const OrientedGraph& gamma, const FamilySpec& spec);

// Associated-graded MIXED differential: minus the sum over white vertices of
// recoloring them black.
ChainVector recolor_delta(const OrientedGraph& gamma, const FamilySpec& spec);

// Family differential (PCY dispatches to pcy_delta).
ChainVector differential(const OrientedGraph& gamma, const FamilySpec& spec);
ChainVector differential(const ChainVector& x, const FamilySpec& spec);

}  // namespace ribbon
