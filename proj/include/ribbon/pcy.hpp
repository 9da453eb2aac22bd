#pragma once

#include <memory>
#include <vector>

#include "ribbon/chain_vector.hpp"
#include "ribbon/enumerate.hpp"

namespace ribbon {

// Haired ribbon quivers.  Hairs are stub vertices (VertexKind::InHair /
// OutHair) carrying labels 1..q and 1..p; the edge to a stub sits in the
// cyclic order of its internal vertex like any other half-edge.

FamilySpec pcy_spec(int d);

// Every internal vertex has valency >= 3, an incoming and an outgoing
// half-leg; the internal quiver is acyclic.
bool is_pcy_generator(const OrientedGraph& g);

ChainVector pcy_delta(const OrientedGraph& g, int d);
ChainVector pcy_delta(const ChainVector& x, int d);

struct HairMatch {
    int out_label;  // out-hair of the right factor
    int in_label;   // in-hair of the left factor
};

struct Composite {
    OrientedGraph graph;
    int sign = 1;
};

// Glue out-hairs of g2 to in-hairs of g1.  Unmatched in-hairs are relabeled
// g1's first then g2's, out-hairs likewise, each keeping their order.
Composite compose(const OrientedGraph& g1, const std::vector<HairMatch>& matching, const OrientedGraph& g2, int d);
ChainVector compose(const ChainVector& x, const std::vector<HairMatch>& matching, const ChainVector& y, int d);

struct HairSlot {
    VertexKind type;  // InHair or OutHair
    int label;
};

// One internal vertex with the given hairs in cyclic order.
OrientedGraph pcy_corolla(int d, const std::vector<HairSlot>& hairs);

// Generators with the given numbers of internal vertices (1 or 2) and
// internal edges, canonical and with reference orientation, sorted by key.
// With unlabeled_only, one representative per hair-relabeling orbit.
GradedBasis pcy_generators(int d, int p, int q, int vertices, int edges, bool unlabeled_only = false);

// Degree piece; spec.vertices and spec.edges must be set.
GradedBasis pcy_basis(const FamilySpec& spec, int degree);

}  // namespace ribbon
