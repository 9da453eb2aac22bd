#include "ribbon/pcy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ribbon/canonical.hpp"
#include "ribbon/differential.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/quiver.hpp"

namespace ribbon {

namespace {

struct Slot {
    bool hair = false;
    int edge = -1;         // edge id when !hair
    bool tail = false;     // this end is the edge's source
    VertexKind type = VertexKind::InHair;
    int label = 0;
};

// Internal half-edges first, vertex by vertex in slot order, then one stub per hair.
OrientedGraph build_haired(const std::vector<std::vector<Slot>>& verts, int d) {
    int n_int = 0;
    int n_hair = 0;
    for (const auto& v : verts) {
        n_int += static_cast<int>(v.size());
        for (const auto& s : v) n_hair += s.hair ? 1 : 0;
    }
    const int n = n_int + n_hair;
    std::vector<int> s0(n), s1(n, -1);
    std::vector<std::uint8_t> tail(n, 0);
    std::vector<VertexKind> kind(n, VertexKind::Black);
    std::vector<int> label(n, 0);
    std::vector<int> edge_end(64, -1);
    int h = 0, stub = n_int;
    for (const auto& v : verts) {
        const int first = h;
        for (std::size_t i = 0; i < v.size(); ++i, ++h) {
            s0[h] = i + 1 < v.size() ? h + 1 : first;
            const Slot& s = v[i];
            if (s.hair) {
                s1[h] = stub;
                s1[stub] = h;
                s0[stub] = stub;
                kind[stub] = s.type;
                label[stub] = s.label;
                if (s.type == VertexKind::InHair) tail[stub] = 1;
                else tail[h] = 1;
                ++stub;
            } else {
                tail[h] = s.tail ? 1 : 0;
                if (edge_end[s.edge] < 0) {
                    edge_end[s.edge] = h;
                } else {
                    s1[h] = edge_end[s.edge];
                    s1[edge_end[s.edge]] = h;
                }
            }
        }
    }
    OrientedGraph og;
    og.g.graph = RibbonGraph::from_trusted(std::move(s0), std::move(s1));
    og.g.tail = std::move(tail);
    og.g.kind = std::move(kind);
    og.g.hair_label = std::move(label);
    og.ori = reference_orientation(og.g, orientation_rule(pcy_spec(d)));
    return og;
}

bool internal_vertex(const DecoratedGraph& g, int v) { return !g.is_stub(g.graph.vertex_half_edges(v)[0]); }

std::vector<int> stubs_of(const DecoratedGraph& g, VertexKind k) {
    std::vector<int> out;
    for (int h = 0; h < g.graph.n_half(); ++h)
        if (g.kind_of(h) == k) out.push_back(h);
    return out;
}

int stub_with_label(const DecoratedGraph& g, VertexKind k, int label) {
    for (int h = 0; h < g.graph.n_half(); ++h)
        if (g.kind_of(h) == k && g.hair_label[h] == label) return h;
    return -1;
}

// All subsets of {1..n-1} of size r, as sorted vectors.
void subsets(int n, int r, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int i = from; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

void unlabeled_shapes(int d, int p, int q, int vertices, int edges, std::vector<OrientedGraph>& out) {
    const auto spec = pcy_spec(d);
    const auto tag = family_tag(spec);
    std::set<std::string> seen;
    auto offer = [&](const std::vector<std::vector<Slot>>& verts) {
        auto og = build_haired(verts, d);
        if (!is_pcy_generator(og)) return;
        auto cf = canonical_form(og, tag);
        if (seen.insert(cf.key).second) out.push_back(relabel(og, cf.relabel));
    };
    const int hairs = p + q;
    if (vertices == 1) {
        if (edges != 0) return;
        std::vector<int> types(hairs, 0);
        std::fill(types.begin() + q, types.end(), 1);
        do {
            std::vector<std::vector<Slot>> verts(1);
            for (int t : types) verts[0].push_back({true, -1, false, t ? VertexKind::OutHair : VertexKind::InHair, 0});
            offer(verts);
        } while (std::next_permutation(types.begin(), types.end()));
        return;
    }
    if (vertices != 2 || edges < 1) return;
    const int total = 2 * edges + hairs;
    for (int a = std::max(3, edges); a <= total - 3; ++a) {
        const int b = total - a;
        if (b < edges) continue;
        std::vector<std::vector<int>> su, sw;
        subsets(a, edges - 1, su);
        subsets(b, edges - 1, sw);
        std::vector<int> types(hairs, 0);
        std::fill(types.begin() + q, types.end(), 1);
        for (const auto& cu : su) {
            for (const auto& cw : sw) {
                std::vector<int> match(edges - 1);
                std::iota(match.begin(), match.end(), 1);
                do {
                    std::sort(types.begin(), types.end());
                    do {
                        std::vector<std::vector<Slot>> verts(2);
                        verts[0].assign(a, Slot{});
                        verts[1].assign(b, Slot{});
                        verts[0][0] = {false, 0, true};
                        verts[1][0] = {false, 0, false};
                        for (int i = 0; i + 1 < edges; ++i) {
                            verts[0][cu[i]] = {false, i + 1, true};
                            verts[1][cw[match[i] - 1]] = {false, i + 1, false};
                        }
                        int t = 0;
                        for (int x = 0; x < 2; ++x) {
                            auto& vs = verts[x];
                            const auto& chosen = x == 0 ? cu : cw;
                            for (int i = 1; i < static_cast<int>(vs.size()); ++i) {
                                if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
                                vs[i] = {true, -1, false, types[t++] ? VertexKind::OutHair : VertexKind::InHair, 0};
                            }
                        }
                        offer(verts);
                    } while (std::next_permutation(types.begin(), types.end()));
                } while (std::next_permutation(match.begin(), match.end()));
            }
        }
    }
}

}  // namespace

FamilySpec pcy_spec(int d) {
    FamilySpec s;
    s.family = Family::PCY;
    s.d = d;
    s.p = s.q = 1;
    return s;
}

bool is_pcy_generator(const OrientedGraph& og) {
    const auto& dg = og.g;
    const auto& g = dg.graph;
    if (!dg.directed() || dg.kind.empty() || !g.is_connected()) return false;
    bool has_in = false, has_out = false;
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto hs = g.vertex_half_edges(v);
        if (!internal_vertex(dg, v)) {
            if (hs.size() != 1 || dg.is_stub(g.sigma1(hs[0]))) return false;
            if (dg.kind_of(hs[0]) == VertexKind::InHair) has_in = true;
            else has_out = true;
            continue;
        }
        if (hs.size() < 3) return false;
        bool in = false, out = false;
        for (int h : hs) (dg.tail[h] ? out : in) = true;
        if (!in || !out) return false;
    }
    return has_in && has_out && is_acyclic(g, dg.tail);
}

ChainVector pcy_delta(const OrientedGraph& gamma, int d) {
    if (!is_pcy_generator(gamma)) throw RibbonError(ErrorCode::NotAGenerator, "pcy_delta needs a pcy generator");
    const auto spec = pcy_spec(d);
    const auto rule = orientation_rule(spec);
    const auto tag = family_tag(spec);
    const bool odd = d % 2 != 0;
    const auto& g = gamma.g.graph;
    const int n = g.n_half();
    ChainVector out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!internal_vertex(gamma.g, v)) continue;
        const int k = g.valency(v);
        const int vi = odd ? vertex_item_index(gamma, v) : -1;
        for (int len = 2; len + 2 <= k; ++len) {
            for (int start = 0; start < k; ++start) {
                OrientedGraph t = split_raw(gamma, v, start, len);
                t.g.tail[n] = 1;
                if (!is_pcy_generator(t)) continue;
                int sign = 1;
                if (odd) {
                    t.ori.items[vi].half_edge = n;
                    t.ori.items.insert(t.ori.items.begin() + vi + 1, {ItemKind::Vertex, n + 1});
                    if (vi % 2) sign = -1;
                } else {
                    t.ori.items.insert(t.ori.items.begin(), {ItemKind::Edge, n});
                }
                add_graph(out, t, sign, tag, rule);
            }
        }
    }
    return out;
}

ChainVector pcy_delta(const ChainVector& x, int d) {
    ChainVector out;
    for (const auto& [key, t] : x.terms()) out.add(pcy_delta(*t.rep, d), t.coeff);
    return out;
}

Composite compose(const OrientedGraph& g1, const std::vector<HairMatch>& matching, const OrientedGraph& g2, int d) {
    if (matching.empty()) throw RibbonError(ErrorCode::BadMatching, "empty matching");
    const int n1 = g1.g.graph.n_half(), n2 = g2.g.graph.n_half();
    std::vector<int> in_stub, out_stub;
    for (const auto& mt : matching) {
        int si = stub_with_label(g1.g, VertexKind::InHair, mt.in_label);
        int so = stub_with_label(g2.g, VertexKind::OutHair, mt.out_label);
        if (si < 0 || so < 0) {
            if (stub_with_label(g1.g, VertexKind::OutHair, mt.in_label) >= 0 ||
                stub_with_label(g2.g, VertexKind::InHair, mt.out_label) >= 0)
                throw RibbonError(ErrorCode::TypeMismatch, "matched hairs have the wrong type");
            throw RibbonError(ErrorCode::BadMatching, "matched hair does not exist");
        }
        if (std::find(in_stub.begin(), in_stub.end(), si) != in_stub.end() ||
            std::find(out_stub.begin(), out_stub.end(), so + n1) != out_stub.end())
            throw RibbonError(ErrorCode::BadMatching, "matching is not injective");
        in_stub.push_back(si);
        out_stub.push_back(so + n1);
    }

    const int n = n1 + n2;
    std::vector<int> s0(n), s1(n);
    std::vector<std::uint8_t> tail(n);
    std::vector<VertexKind> kind(n);
    std::vector<int> label(n);
    for (int h = 0; h < n; ++h) {
        const auto& src = h < n1 ? g1.g : g2.g;
        const int off = h < n1 ? 0 : n1;
        const int x = h - off;
        s0[h] = src.graph.sigma0(x) + off;
        s1[h] = src.graph.sigma1(x) + off;
        tail[h] = src.tail[x];
        kind[h] = src.kind[x];
        label[h] = src.hair_label[x];
    }
    std::vector<char> removed(n, 0);
    for (std::size_t i = 0; i < matching.size(); ++i) {
        const int si = in_stub[i], so = out_stub[i];
        const int ii = s1[si], io = s1[so];
        s1[ii] = io;
        s1[io] = ii;
        removed[si] = removed[so] = 1;
    }

    // Orientation: omega1 then omega2; contract each glued pair.
    std::vector<OrientationItem> w1 = g1.ori.items, w2 = g2.ori.items;
    for (auto& it : w2) it.half_edge += n1;
    int sign = 1;
    const bool odd = d % 2 != 0;
    for (std::size_t i = 0; i < matching.size(); ++i) {
        const int si = in_stub[i], so = out_stub[i];
        auto pi = std::find(w1.begin(), w1.end(), OrientationItem{ItemKind::InHair, si});
        if (pi == w1.end()) throw RibbonError(ErrorCode::TypeMismatch, "orientation lacks an in-hair");
        if (!odd) {
            *pi = {ItemKind::Edge, s1[si]};
            continue;
        }
        auto po = std::find(w2.begin(), w2.end(), OrientationItem{ItemKind::OutHair, so});
        if (po == w2.end()) throw RibbonError(ErrorCode::TypeMismatch, "orientation lacks an out-hair");
        if ((w1.end() - pi - 1) % 2) sign = -sign;
        if ((po - w2.begin()) % 2) sign = -sign;
        w1.erase(pi);
        w2.erase(po);
    }
    // The new edge's head half-edge was the in-hair's partner; s1 of the
    // removed stub still points at it, and it now pairs with io.

    // Relabel unmatched hairs.
    int next_in = 1, next_out = 1;
    for (VertexKind k : {VertexKind::InHair, VertexKind::OutHair}) {
        int& next = k == VertexKind::InHair ? next_in : next_out;
        for (int part = 0; part < 2; ++part) {
            std::vector<std::pair<int, int>> hs;
            for (int h = part ? n1 : 0; h < (part ? n : n1); ++h)
                if (!removed[h] && kind[h] == k) hs.emplace_back(label[h], h);
            std::sort(hs.begin(), hs.end());
            for (auto [l, h] : hs) label[h] = next++;
        }
    }

    std::vector<int> newid(n, -1);
    int m = 0;
    for (int h = 0; h < n; ++h)
        if (!removed[h]) newid[h] = m++;
    std::vector<int> t0(m), t1(m);
    Composite c;
    c.graph.g.tail.resize(m);
    c.graph.g.kind.resize(m);
    c.graph.g.hair_label.resize(m);
    for (int h = 0; h < n; ++h) {
        if (removed[h]) continue;
        const int x = newid[h];
        t0[x] = newid[s0[h]];
        t1[x] = newid[s1[h]];
        c.graph.g.tail[x] = tail[h];
        c.graph.g.kind[x] = kind[h];
        c.graph.g.hair_label[x] = label[h];
    }
    c.graph.g.graph = RibbonGraph::from_trusted(std::move(t0), std::move(t1));
    for (auto* w : {&w1, &w2})
        for (auto it : *w) c.graph.ori.items.push_back({it.kind, newid[it.half_edge]});
    c.sign = sign;
    return c;
}

ChainVector compose(const ChainVector& x, const std::vector<HairMatch>& matching, const ChainVector& y, int d) {
    const auto spec = pcy_spec(d);
    const auto rule = orientation_rule(spec);
    const auto tag = family_tag(spec);
    ChainVector out;
    for (const auto& [kx, tx] : x.terms()) {
        for (const auto& [ky, ty] : y.terms()) {
            auto c = compose(*tx.rep, matching, *ty.rep, d);
            add_graph(out, c.graph, tx.coeff * ty.coeff * c.sign, tag, rule);
        }
    }
    return out;
}

OrientedGraph pcy_corolla(int d, const std::vector<HairSlot>& hairs) {
    std::vector<std::vector<Slot>> verts(1);
    for (const auto& h : hairs) verts[0].push_back({true, -1, false, h.type, h.label});
    return build_haired(verts, d);
}

GradedBasis pcy_generators(int d, int p, int q, int vertices, int edges, bool unlabeled_only) {
    const auto spec = pcy_spec(d);
    const auto rule = orientation_rule(spec);
    const auto tag = family_tag(spec);
    std::vector<OrientedGraph> shapes;
    unlabeled_shapes(d, p, q, vertices, edges, shapes);

    GradedBasis out;
    out.spec = spec;
    out.spec.p = p;
    out.spec.q = q;
    out.spec.vertices = vertices;
    out.spec.edges = edges;
    out.degree = d * vertices + (1 - d) * edges + (2 - d) * p - q;
    for (auto& shape : shapes) {
        const auto ins = stubs_of(shape.g, VertexKind::InHair);
        const auto outs = stubs_of(shape.g, VertexKind::OutHair);
        std::vector<int> pi(ins.size()), po(outs.size());
        std::iota(pi.begin(), pi.end(), 1);
        do {
            std::iota(po.begin(), po.end(), 1);
            do {
                OrientedGraph og = shape;
                for (std::size_t i = 0; i < ins.size(); ++i) og.g.hair_label[ins[i]] = pi[i];
                for (std::size_t i = 0; i < outs.size(); ++i) og.g.hair_label[outs[i]] = po[i];
                og.ori = reference_orientation(og.g, rule);
                auto cf = canonical_form(og, tag);
                if (!cf.is_zero && !out.find(cf.key))
                    out.add(cf.key, std::make_shared<OrientedGraph>(canonical_representative(og, cf, rule)));
            } while (!unlabeled_only && std::next_permutation(po.begin(), po.end()));
        } while (!unlabeled_only && std::next_permutation(pi.begin(), pi.end()));
    }
    out.finalize();
    return out;
}

GradedBasis pcy_basis(const FamilySpec& spec, int degree) {
    if (!spec.vertices || !spec.edges)
        throw RibbonError(ErrorCode::InfiniteDegreePiece, "pcy pieces need fixed vertex and edge counts");
    auto b = pcy_generators(spec.d, spec.p, spec.q, *spec.vertices, *spec.edges);
    if (b.degree != degree) {
        GradedBasis empty;
        empty.spec = b.spec;
        empty.degree = degree;
        return empty;
    }
    return b;
}

}  // namespace ribbon
