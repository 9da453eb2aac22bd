#include "ribbon/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

struct Workspace {
    std::vector<int> tags, nid, order, best_nid, code, best_code;
    std::vector<std::int64_t> inv, keys;
};

int item_key(const RibbonGraph& g, const OrientationItem& it, const std::vector<int>& nid) {
    switch (it.kind) {
    case ItemKind::Edge:
        return std::min(nid[it.half_edge], nid[g.sigma1(it.half_edge)]);
    case ItemKind::Vertex: {
        int best = nid[it.half_edge];
        for (int x : g.vertex_half_edges(g.vertex_of(it.half_edge))) best = std::min(best, nid[x]);
        return best;
    }
    default:
        return nid[it.half_edge];
    }
}

int parity_of(std::vector<std::int64_t>& keys) {
    int inversions = 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j)
            if (keys[i] > keys[j]) ++inversions;
    return (inversions & 1) ? -1 : 1;
}

int relabel_sign(const RibbonGraph& g, const Orientation& o, const std::vector<int>& nid,
                 std::vector<std::int64_t>& keys) {
    const std::int64_t n = g.n_half();
    keys.clear();
    for (const auto& it : o.items) keys.push_back(static_cast<std::int64_t>(it.kind) * n + item_key(g, it, nid));
    int s = parity_of(keys);
    if (!o.dir_sign.empty()) {
        for (int h = 0; h < g.n_half(); ++h)
            if (o.dir_sign[h] && nid[h] > nid[g.sigma1(h)]) s = -s;
    }
    return s;
}

}  // namespace

CanonicalForm canonical_form(const OrientedGraph& og, std::uint8_t family_tag) {
    thread_local Workspace ws;
    const auto& dg = og.g;
    const auto& g = dg.graph;
    const int n = g.n_half();
    if (n > 255) throw RibbonError(ErrorCode::ResourceLimit, "graphs are limited to 255 half-edges");

    CanonicalForm cf;
    if (n == 0) {
        cf.key = std::string(1, static_cast<char>(family_tag)) + '\0';
        return cf;
    }

    ws.tags.resize(n);
    ws.inv.resize(n);
    for (int h = 0; h < n; ++h) {
        ws.tags[h] = dg.tag(h);
        ws.inv[h] = (static_cast<std::int64_t>(ws.tags[h]) << 20) |
                    (static_cast<std::int64_t>(g.valency(g.vertex_of(h))) << 10) |
                    g.valency(g.vertex_of(g.sigma1(h)));
    }
    const std::int64_t min_inv = *std::min_element(ws.inv.begin(), ws.inv.end());

    ws.code.resize(3 * n);
    ws.best_code.resize(3 * n);
    ws.nid.resize(n);
    bool have_best = false;
    int first_sign = 1;
    for (int s = 0; s < n; ++s) {
        if (ws.inv[s] != min_inv) continue;
        std::fill(ws.nid.begin(), ws.nid.end(), -1);
        ws.order.clear();
        ws.nid[s] = 0;
        ws.order.push_back(s);
        int next = 1;
        int cmp = have_best ? 0 : -1;
        bool aborted = false;
        for (int i = 0; i < n; ++i) {
            if (i >= static_cast<int>(ws.order.size()))
                throw RibbonError(ErrorCode::Disconnected, "canonical form of a disconnected graph");
            const int old = ws.order[i];
            for (int nb : {g.sigma1(old), g.sigma0(old)}) {
                if (ws.nid[nb] < 0) {
                    ws.nid[nb] = next++;
                    ws.order.push_back(nb);
                }
            }
            const int t[3] = {ws.tags[old], ws.nid[g.sigma0(old)], ws.nid[g.sigma1(old)]};
            for (int k = 0; k < 3; ++k) {
                ws.code[3 * i + k] = t[k];
                if (cmp == 0) {
                    int b = ws.best_code[3 * i + k];
                    if (t[k] < b) cmp = -1;
                    else if (t[k] > b) { aborted = true; break; }
                }
            }
            if (aborted) break;
        }
        if (aborted) continue;
        const int sgn = relabel_sign(g, og.ori, ws.nid, ws.keys);
        if (cmp < 0) {
            have_best = true;
            std::swap(ws.code, ws.best_code);
            ws.best_nid = ws.nid;
            first_sign = sgn;
            cf.is_zero = false;
            cf.automorphisms = 1;
        } else {
            ++cf.automorphisms;
            if (sgn != first_sign) cf.is_zero = true;
        }
    }

    cf.sign = first_sign;
    cf.relabel = ws.best_nid;
    cf.key.reserve(2 + 4 * n);
    cf.key.push_back(static_cast<char>(family_tag));
    cf.key.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i) {
        const int t = ws.best_code[3 * i];
        cf.key.push_back(static_cast<char>(t & 0xff));
        cf.key.push_back(static_cast<char>((t >> 8) & 0xff));
        cf.key.push_back(static_cast<char>(ws.best_code[3 * i + 1]));
        cf.key.push_back(static_cast<char>(ws.best_code[3 * i + 2]));
    }
    return cf;
}

OrientedGraph canonical_representative(const OrientedGraph& og, const CanonicalForm& cf,
                                       const OrientationRule& rule) {
    OrientedGraph rep = relabel(og, cf.relabel);
    rep.ori = reference_orientation(rep.g, rule);
    return rep;
}

GraphClass canonical_class(const OrientedGraph& og, std::uint8_t family_tag) {
    auto cf = canonical_form(og, family_tag);
    return {std::move(cf.key), cf.sign, cf.is_zero};
}

int orientation_sign(const RibbonGraph& g, const Orientation& a, const Orientation& b) {
    // Position of each item of b, then parity of a read through it.
    std::vector<int> ident(g.n_half());
    for (int h = 0; h < g.n_half(); ++h) ident[h] = h;
    std::vector<std::int64_t> ka, kb;
    const std::int64_t n = g.n_half();
    for (const auto& it : a.items) ka.push_back(static_cast<std::int64_t>(it.kind) * n + item_key(g, it, ident));
    for (const auto& it : b.items) kb.push_back(static_cast<std::int64_t>(it.kind) * n + item_key(g, it, ident));
    if (ka.size() != kb.size()) throw RibbonError(ErrorCode::TypeMismatch, "orientations over different items");
    std::vector<std::int64_t> pos(ka.size());
    for (std::size_t i = 0; i < ka.size(); ++i) {
        auto j = std::find(kb.begin(), kb.end(), ka[i]);
        if (j == kb.end()) throw RibbonError(ErrorCode::TypeMismatch, "orientations over different items");
        pos[i] = j - kb.begin();
    }
    int s = parity_of(pos);
    if (!a.dir_sign.empty() || !b.dir_sign.empty()) {
        for (int h = 0; h < g.n_half(); ++h) {
            int x = a.dir_sign.empty() ? 0 : a.dir_sign[h];
            int y = b.dir_sign.empty() ? 0 : b.dir_sign[h];
            if (x && !y) s = -s;
        }
    }
    return s;
}

}  // namespace ribbon
