#include "ribbon/decorated.hpp"

#include <algorithm>

namespace ribbon {

int DecoratedGraph::tag(int h) const {
    int b = boundary_label.empty() ? 0 : boundary_label[h] + 1;
    int hl = hair_label.empty() ? 0 : hair_label[h];
    int t = tail.empty() ? 0 : tail[h];
    return ((b * 64 + hl) * 4 + static_cast<int>(kind_of(h))) * 2 + t;
}

Orientation reference_orientation(const DecoratedGraph& dg, const OrientationRule& rule) {
    const auto& g = dg.graph;
    Orientation o;
    if (rule.edges) {
        for (int h = 0; h < g.n_half(); ++h)
            if (h < g.sigma1(h) && dg.is_internal_edge(h)) o.items.push_back({ItemKind::Edge, h});
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        int rep = g.vertex_half_edges(v)[0];
        auto k = dg.kind_of(rep);
        if ((k == VertexKind::Black && rule.black_vertices) || (k == VertexKind::White && rule.white_vertices))
            o.items.push_back({ItemKind::Vertex, rep});
    }
    if (rule.out_hairs) {
        for (int h = 0; h < g.n_half(); ++h)
            if (dg.kind_of(h) == VertexKind::OutHair) o.items.push_back({ItemKind::OutHair, h});
    }
    if (rule.in_hairs) {
        for (int h = 0; h < g.n_half(); ++h)
            if (dg.kind_of(h) == VertexKind::InHair) o.items.push_back({ItemKind::InHair, h});
    }
    if (rule.signed_directions) {
        o.dir_sign.assign(g.n_half(), 0);
        for (int h = 0; h < g.n_half(); ++h)
            if (h < g.sigma1(h) && dg.is_internal_edge(h)) o.dir_sign[h] = 1;
    }
    return o;
}

namespace {

template <class T>
std::vector<T> permute(const std::vector<T>& v, std::span<const int> perm) {
    if (v.empty()) return {};
    std::vector<T> out(v.size());
    for (std::size_t h = 0; h < v.size(); ++h) out[perm[h]] = v[h];
    return out;
}

}  // namespace

OrientedGraph relabel(const OrientedGraph& og, std::span<const int> perm) {
    const auto& g = og.g.graph;
    const int n = g.n_half();
    std::vector<int> s0(n), s1(n);
    for (int h = 0; h < n; ++h) {
        s0[perm[h]] = perm[g.sigma0(h)];
        s1[perm[h]] = perm[g.sigma1(h)];
    }
    OrientedGraph out;
    out.g.graph = RibbonGraph::from_trusted(std::move(s0), std::move(s1));
    out.g.tail = permute(og.g.tail, perm);
    out.g.kind = permute(og.g.kind, perm);
    out.g.hair_label = permute(og.g.hair_label, perm);
    out.g.boundary_label = permute(og.g.boundary_label, perm);
    out.ori.items = og.ori.items;
    for (auto& it : out.ori.items) it.half_edge = perm[it.half_edge];
    out.ori.dir_sign = permute(og.ori.dir_sign, perm);
    return out;
}

void propagate_boundary_labels(DecoratedGraph& dg, int first_new) {
    const auto& g = dg.graph;
    dg.boundary_label.resize(g.n_half(), -1);
    for (int h = first_new; h < g.n_half(); ++h) {
        int x = g.sigma_inf(h);
        while (x >= first_new && x != h) x = g.sigma_inf(x);
        dg.boundary_label[h] = x < first_new ? dg.boundary_label[x] : -1;
    }
}

int count_vertices(const DecoratedGraph& dg, VertexKind k) {
    int c = 0;
    for (int v = 0; v < dg.graph.num_vertices(); ++v)
        if (dg.kind_of(dg.graph.vertex_half_edges(v)[0]) == k) ++c;
    return c;
}

int count_internal_edges(const DecoratedGraph& dg) {
    int c = 0;
    for (int h = 0; h < dg.graph.n_half(); ++h)
        if (h < dg.graph.sigma1(h) && dg.is_internal_edge(h)) ++c;
    return c;
}

}  // namespace ribbon
