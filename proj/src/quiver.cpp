#include "ribbon/quiver.hpp"

#include "ribbon/errors.hpp"

namespace ribbon {

bool is_acyclic(const RibbonGraph& g, const Directions& tail) {
    const int nv = g.num_vertices();
    std::vector<int> indeg(nv, 0);
    for (int h = 0; h < g.n_half(); ++h)
        if (!tail[h]) ++indeg[g.vertex_of(h)];
    std::vector<int> ready;
    for (int v = 0; v < nv; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int done = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++done;
        for (int h : g.vertex_half_edges(v)) {
            if (!tail[h]) continue;
            int w = g.vertex_of(g.sigma1(h));
            if (--indeg[w] == 0) ready.push_back(w);
        }
    }
    return done == nv;
}

std::vector<Directions> acyclic_orientations(const RibbonGraph& g) {
    std::vector<int> firsts;
    for (int h = 0; h < g.n_half(); ++h) {
        if (h >= g.sigma1(h)) continue;
        if (g.vertex_of(h) == g.vertex_of(g.sigma1(h))) return {};
        firsts.push_back(h);
    }
    const int e = static_cast<int>(firsts.size());
    if (e > 24) throw RibbonError(ErrorCode::ResourceLimit, "too many edges for orientation enumeration");
    std::vector<Directions> out;
    Directions tail(g.n_half(), 0);
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        for (int i = 0; i < e; ++i) {
            int h = firsts[i];
            bool fwd = (mask >> i) & 1u;
            tail[h] = fwd ? 1 : 0;
            tail[g.sigma1(h)] = fwd ? 0 : 1;
        }
        if (is_acyclic(g, tail)) out.push_back(tail);
    }
    return out;
}

bool has_passing_vertex(const DecoratedGraph& dg) {
    const auto& g = dg.graph;
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto hs = g.vertex_half_edges(v);
        if (hs.size() != 2 || dg.is_stub(hs[0])) continue;
        if (dg.tail[hs[0]] != dg.tail[hs[1]]) return true;
    }
    return false;
}

std::vector<int> sinks(const DecoratedGraph& dg) {
    const auto& g = dg.graph;
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool sink = true;
        for (int h : g.vertex_half_edges(v))
            if (dg.tail[h] && dg.is_internal_edge(h)) sink = false;
        if (sink) out.push_back(v);
    }
    return out;
}

std::vector<int> source_list(const RibbonGraph& g, const Directions& tail) {
    std::vector<int> out;
    for (int h = 0; h < g.n_half(); ++h)
        if (h < g.sigma1(h)) out.push_back(tail[h] ? h : g.sigma1(h));
    return out;
}

Directions directions_from_sources(const RibbonGraph& g, const std::vector<int>& sources) {
    Directions tail(g.n_half(), 0);
    std::size_t i = 0;
    for (int h = 0; h < g.n_half(); ++h) {
        if (h >= g.sigma1(h)) continue;
        if (i >= sources.size()) throw RibbonError(ErrorCode::TypeMismatch, "too few edge sources");
        int s = sources[i++];
        if (s != h && s != g.sigma1(h)) throw RibbonError(ErrorCode::TypeMismatch, "source is not on its edge");
        tail[s] = 1;
    }
    if (i != sources.size()) throw RibbonError(ErrorCode::TypeMismatch, "too many edge sources");
    return tail;
}

}  // namespace ribbon
