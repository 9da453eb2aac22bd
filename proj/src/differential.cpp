#include "ribbon/differential.hpp"

#include "ribbon/errors.hpp"
#include "ribbon/pcy.hpp"
#include "ribbon/quiver.hpp"

namespace ribbon {

OrientedGraph split_raw(const OrientedGraph& og, int v, int start, int len) {
    const auto& g = og.g.graph;
    const int n = g.n_half();
    const auto hs = g.vertex_half_edges(v);
    const int k = static_cast<int>(hs.size());
    const int a = n, b = n + 1;

    std::vector<int> s0(g.sigma0().begin(), g.sigma0().end());
    std::vector<int> s1(g.sigma1().begin(), g.sigma1().end());
    s0.resize(n + 2);
    s1.resize(n + 2);
    s1[a] = b;
    s1[b] = a;
    auto at = [&](int i) { return hs[((start + i) % k + k) % k]; };
    for (int i = 0; i + 1 < len; ++i) s0[at(i)] = at(i + 1);
    s0[at(len - 1)] = a;
    s0[a] = at(0);
    for (int i = len; i + 1 < k; ++i) s0[at(i)] = at(i + 1);
    s0[at(k - 1)] = b;
    s0[b] = at(len);

    OrientedGraph out;
    out.g.graph = RibbonGraph::from_trusted(std::move(s0), std::move(s1));
    const auto& src = og.g;
    if (!src.tail.empty()) {
        out.g.tail = src.tail;
        out.g.tail.resize(n + 2, 0);
    }
    if (!src.kind.empty()) {
        out.g.kind = src.kind;
        out.g.kind.resize(n + 2, src.kind[hs[0]]);
    }
    if (!src.hair_label.empty()) {
        out.g.hair_label = src.hair_label;
        out.g.hair_label.resize(n + 2, 0);
    }
    if (!src.boundary_label.empty()) {
        out.g.boundary_label = src.boundary_label;
        propagate_boundary_labels(out.g, n);
    }
    out.ori = og.ori;
    if (!out.ori.dir_sign.empty()) out.ori.dir_sign.resize(n + 2, 0);
    return out;
}

int vertex_item_index(const OrientedGraph& og, int v) {
    const auto& g = og.g.graph;
    for (std::size_t i = 0; i < og.ori.items.size(); ++i) {
        const auto& it = og.ori.items[i];
        if (it.kind == ItemKind::Vertex && g.vertex_of(it.half_edge) == v) return static_cast<int>(i);
    }
    return -1;
}

ChainVector split_vertex_terms(const OrientedGraph& gamma, const FamilySpec& spec) {
    const bool directed = is_directed(spec.family);
    if (spec.family == Family::MIXED || spec.family == Family::PCY)
        throw RibbonError(ErrorCode::WrongFamily, "vertex splitting applies to rgc/orgc families");
    if (directed != gamma.g.directed()) throw RibbonError(ErrorCode::WrongFamily, "graph does not match family");

    const auto rule = orientation_rule(spec);
    const auto tag = family_tag(spec);
    const bool odd = spec.d % 2 != 0;
    const auto& g = gamma.g.graph;
    const int n = g.n_half();
    ChainVector out;

    for (int v = 0; v < g.num_vertices(); ++v) {
        const int k = g.valency(v);
        const int vi = odd ? vertex_item_index(gamma, v) : -1;
        if (odd && vi < 0) throw RibbonError(ErrorCode::WrongFamily, "orientation lacks a vertex item");
        for (int len = 1; len < k; ++len) {
            // Undirected: each unordered split once, with piece A holding
            // position 0.  Directed: every ordered split, edge from A to B.
            const int nstarts = directed ? k : len;
            for (int j = 0; j < nstarts; ++j) {
                const int start = directed ? j : (k - j) % k;
                OrientedGraph t = split_raw(gamma, v, start, len);
                if (directed) t.g.tail[n] = 1;
                if (odd) {
                    t.ori.items[vi].half_edge = n;
                    t.ori.items.push_back({ItemKind::Vertex, n + 1});
                    if (!directed) t.ori.dir_sign[n] = 1;
                } else {
                    t.ori.items.push_back({ItemKind::Edge, n});
                }
                if (spec.drop_passing && has_passing_vertex(t.g)) continue;
                add_graph(out, t, 1, tag, rule);
            }
        }
    }
    return out;
}

ChainVector recolor_delta(const OrientedGraph& gamma, const FamilySpec& spec) {
    if (spec.family != Family::MIXED) throw RibbonError(ErrorCode::WrongFamily, "recoloring applies to mixed quivers");
    const auto rule = orientation_rule(spec);
    const auto tag = family_tag(spec);
    const bool odd = spec.d % 2 != 0;
    const auto& g = gamma.g.graph;
    ChainVector out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (gamma.g.kind_of(g.vertex_half_edges(v)[0]) != VertexKind::White) continue;
        OrientedGraph t = gamma;
        for (int h : g.vertex_half_edges(v)) t.g.kind[h] = VertexKind::Black;
        int sign = -1;
        if (odd) {
            const int vi = vertex_item_index(gamma, v);
            if (vi < 0) throw RibbonError(ErrorCode::WrongFamily, "orientation lacks a white vertex item");
            const int after = static_cast<int>(t.ori.items.size()) - vi - 1;
            if (after % 2) sign = -sign;
            t.ori.items.erase(t.ori.items.begin() + vi);
        } else {
            t.ori.items.push_back({ItemKind::Vertex, g.vertex_half_edges(v)[0]});
        }
        add_graph(out, t, sign, tag, rule);
    }
    return out;
}

ChainVector differential(const OrientedGraph& gamma, const FamilySpec& spec) {
    switch (spec.family) {
    case Family::MIXED: return recolor_delta(gamma, spec);
    case Family::PCY: return pcy_delta(gamma, spec.d);
    default: return split_vertex_terms(gamma, spec);
    }
}

ChainVector differential(const ChainVector& x, const FamilySpec& spec) {
    ChainVector out;
    for (const auto& [key, term] : x.terms()) out.add(differential(*term.rep, spec), term.coeff);
    return out;
}

}  // namespace ribbon
