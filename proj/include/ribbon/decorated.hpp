#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

// Hairs are modeled as univalent stub vertices.  An in-hair stub is the tail
// of its edge, an out-hair stub is the head.
enum class VertexKind : std::uint8_t { Black = 0, White = 1, InHair = 2, OutHair = 3 };

// Per-half-edge decorations.  Empty vectors mean "absent".
struct DecoratedGraph {
    RibbonGraph graph;
    std::vector<std::uint8_t> tail;     // 1 on the source half-edge of each directed edge
    std::vector<VertexKind> kind;       // kind of the vertex owning the half-edge
    std::vector<int> hair_label;        // 1-based label on hair stub half-edges, 0 elsewhere
    std::vector<int> boundary_label;    // label of the boundary the half-edge lies on

    bool directed() const { return !tail.empty(); }
    VertexKind kind_of(int h) const { return kind.empty() ? VertexKind::Black : kind[h]; }
    bool is_stub(int h) const {
        auto k = kind_of(h);
        return k == VertexKind::InHair || k == VertexKind::OutHair;
    }
    bool is_internal_edge(int h) const { return !is_stub(h) && !is_stub(graph.sigma1(h)); }
    int tag(int h) const;
};

enum class ItemKind : std::uint8_t { Edge = 0, Vertex = 1, OutHair = 2, InHair = 3 };

// One odd-degree object, named by a half-edge: an edge by either half, a
// vertex by any of its half-edges, a hair by its stub half-edge.
struct OrientationItem {
    ItemKind kind;
    int half_edge;
    friend bool operator==(const OrientationItem&, const OrientationItem&) = default;
};

// An orientation is an ordering of the odd objects; swapping two negates.
// Edges whose direction reversal acts by -1 carry their chosen tail in
// dir_sign (RGC at odd d).
struct Orientation {
    std::vector<OrientationItem> items;
    std::vector<std::uint8_t> dir_sign;
};

struct OrientedGraph {
    DecoratedGraph g;
    Orientation ori;
};

// Which objects are odd for a family at a given parity of d.
struct OrientationRule {
    bool edges = false;
    bool black_vertices = false;
    bool white_vertices = false;
    bool out_hairs = false;
    bool in_hairs = false;
    bool signed_directions = false;
};

// Items sorted by (kind, least half-edge); signed edges point from their
// lower half-edge.
Orientation reference_orientation(const DecoratedGraph& g, const OrientationRule& rule);

// Apply a half-edge relabeling old -> new to graph, decorations and items.
OrientedGraph relabel(const OrientedGraph& og, std::span<const int> perm);

// Boundary labels for half-edges >= first_new, copied along boundary cycles
// from older half-edges.
void propagate_boundary_labels(DecoratedGraph& g, int first_new);

int count_vertices(const DecoratedGraph& g, VertexKind k);
int count_internal_edges(const DecoratedGraph& g);

}  // namespace ribbon
