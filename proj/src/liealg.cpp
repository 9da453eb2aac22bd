#include "ribbon/liealg.hpp"

#include "ribbon/canonical.hpp"
#include "ribbon/differential.hpp"
#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

void check_lie_family(const FamilySpec& spec) {
    if (spec.family != Family::RGC1 && spec.family != Family::ORGC1)
        throw RibbonError(ErrorCode::WrongFamily, "the bracket lives on rgc1/orgc1");
}

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

namespace {

// Calls f(raw, sign) for every term of host o_v guest.  raw is reused between calls.
template <class F>
void for_each_insertion(const OrientedGraph& host, int v, const OrientedGraph& guest, const FamilySpec& spec, F&& f) {
    const auto& hg = host.g.graph;
    const auto& gg = guest.g.graph;
    const auto bs = boundaries(gg);
    if (bs.size() != 1) throw RibbonError(ErrorCode::WrongFamily, "guest must have exactly one boundary");
    const bool odd = spec.d % 2 != 0;

    const int n1 = hg.n_half(), n2 = gg.n_half(), n = n1 + n2;
    const auto hs = hg.vertex_half_edges(v);
    const int k = static_cast<int>(hs.size());
    std::vector<int> cyc(bs[0].rbegin(), bs[0].rend());
    const int N = static_cast<int>(cyc.size());

    std::vector<int> base_s0(n), s1(n);
    for (int h = 0; h < n1; ++h) {
        base_s0[h] = hg.sigma0(h);
        s1[h] = hg.sigma1(h);
    }
    for (int h = 0; h < n2; ++h) {
        base_s0[h + n1] = gg.sigma0(h) + n1;
        s1[h + n1] = gg.sigma1(h) + n1;
    }

    OrientedGraph t;
    if (host.g.directed()) {
        t.g.tail = host.g.tail;
        t.g.tail.insert(t.g.tail.end(), guest.g.tail.begin(), guest.g.tail.end());
    }
    int osign = 1;
    if (!odd) {
        t.ori.items = host.ori.items;
        for (auto it : guest.ori.items) t.ori.items.push_back({it.kind, it.half_edge + n1});
    } else {
        const int vi = vertex_item_index(host, v);
        if (vi < 0) throw RibbonError(ErrorCode::WrongFamily, "orientation lacks a vertex item");
        for (int i = 0; i < static_cast<int>(host.ori.items.size()); ++i) {
            if (i == vi) {
                for (auto it : guest.ori.items) t.ori.items.push_back({it.kind, it.half_edge + n1});
            } else {
                t.ori.items.push_back(host.ori.items[i]);
            }
        }
        osign = sign_pow(static_cast<long>(gg.num_vertices() - 1) * vi);
        if (!host.ori.dir_sign.empty() || !guest.ori.dir_sign.empty()) {
            t.ori.dir_sign.assign(n, 0);
            for (int h = 0; h < n1 && !host.ori.dir_sign.empty(); ++h) t.ori.dir_sign[h] = host.ori.dir_sign[h];
            for (int h = 0; h < n2 && !guest.ori.dir_sign.empty(); ++h) t.ori.dir_sign[h + n1] = guest.ori.dir_sign[h];
        }
    }

    // bin[i] for the half-edges hs[1..k-1]: 0 = rest of h1's corner after h1,
    // 1..N-1 = following corners, N = h1's corner before h1.
    std::vector<int> bin(k, 0), s0(n);
    std::vector<std::vector<int>> lists(N);
    for (int j0 = 0; j0 < N; ++j0) {
        std::fill(bin.begin(), bin.end(), 0);
        while (true) {
            for (auto& l : lists) l.clear();
            auto& first = lists[j0];
            for (int i = 1; i < k; ++i)
                if (bin[i] == N) first.push_back(hs[i]);
            first.push_back(hs[0]);
            for (int i = 1; i < k; ++i)
                if (bin[i] == 0) first.push_back(hs[i]);
            for (int i = 1; i < k; ++i)
                if (bin[i] > 0 && bin[i] < N) lists[(j0 + bin[i]) % N].push_back(hs[i]);

            s0 = base_s0;
            for (int c = 0; c < N; ++c) {
                const int u = cyc[c] + n1;
                int prev = u;
                for (int h : lists[c]) {
                    s0[prev] = h;
                    prev = h;
                }
                s0[prev] = base_s0[u];
            }
            t.g.graph.assign_trusted(s0, s1);
            f(static_cast<const OrientedGraph&>(t), osign);

            // next weakly increasing assignment of hs[1..k-1] to bins 0..N
            int i = k - 1;
            while (i >= 1 && bin[i] == N) --i;
            if (i < 1) break;
            ++bin[i];
            for (int j = i + 1; j < k; ++j) bin[j] = bin[i];
        }
    }
}

struct ChainSink {
    ChainVector& out;
    std::uint8_t tag;
    OrientationRule rule;
    void operator()(const OrientedGraph& x, const OrientedGraph& y, const Rational& c, const FamilySpec& spec) {
        for (int v = 0; v < x.g.graph.num_vertices(); ++v)
            for_each_insertion(x, v, y, spec, [&](const OrientedGraph& t, int s) { add_graph(out, t, s > 0 ? c : Rational(-c), tag, rule); });
    }
};

struct CoeffSink {
    CoeffMap& out;
    std::uint8_t tag;
    void operator()(const OrientedGraph& x, const OrientedGraph& y, const Rational& c, const FamilySpec& spec) {
        for (int v = 0; v < x.g.graph.num_vertices(); ++v)
            for_each_insertion(x, v, y, spec, [&](const OrientedGraph& t, int s) {
                auto cf = canonical_form(t, tag);
                if (cf.is_zero) return;
                auto& slot = out[cf.key];
                if (s * cf.sign > 0) slot += c;
                else slot -= c;
            });
    }
};

template <class Sink>
void pre_lie_into(Sink& sink, const ChainVector& x, const ChainVector& y, const Rational& scale, const FamilySpec& spec) {
    for (const auto& [kx, tx] : x.terms())
        for (const auto& [ky, ty] : y.terms()) sink(*tx.rep, *ty.rep, scale * tx.coeff * ty.coeff, spec);
}

}  // namespace

ChainVector insert_boundary(const OrientedGraph& host, int v, const OrientedGraph& guest, const FamilySpec& spec) {
    check_lie_family(spec);
    ChainVector out;
    const auto tag = family_tag(spec);
    const auto rule = orientation_rule(spec);
    for_each_insertion(host, v, guest, spec, [&](const OrientedGraph& t, int s) { add_graph(out, t, s, tag, rule); });
    return out;
}

ChainVector pre_lie(const OrientedGraph& x, const OrientedGraph& y, const FamilySpec& spec) {
    check_lie_family(spec);
    ChainVector out;
    ChainSink sink{out, family_tag(spec), orientation_rule(spec)};
    sink(x, y, 1, spec);
    return out;
}

ChainVector pre_lie(const ChainVector& x, const ChainVector& y, const FamilySpec& spec) {
    check_lie_family(spec);
    ChainVector out;
    ChainSink sink{out, family_tag(spec), orientation_rule(spec)};
    pre_lie_into(sink, x, y, 1, spec);
    return out;
}

int chain_degree(const ChainVector& x, const FamilySpec& spec) {
    bool first = true;
    int deg = 0;
    for (const auto& [k, t] : x.terms()) {
        int dd = degree_of(spec, t.rep->g);
        if (first) deg = dd;
        else if (dd != deg) throw RibbonError(ErrorCode::TypeMismatch, "chain is not homogeneous");
        first = false;
    }
    return deg;
}

ChainVector bracket(const ChainVector& x, const ChainVector& y, const FamilySpec& spec) {
    check_lie_family(spec);
    if (x.is_zero() || y.is_zero()) return {};
    const long dx = chain_degree(x, spec), dy = chain_degree(y, spec);
    ChainVector out;
    ChainSink sink{out, family_tag(spec), orientation_rule(spec)};
    pre_lie_into(sink, x, y, 1, spec);
    pre_lie_into(sink, y, x, -sign_pow(dx * dy), spec);
    return out;
}

void bracket_into(CoeffMap& out, const ChainVector& x, const ChainVector& y, const Rational& scale,
                  const FamilySpec& spec) {
    check_lie_family(spec);
    if (x.is_zero() || y.is_zero()) return;
    const long dx = chain_degree(x, spec), dy = chain_degree(y, spec);
    CoeffSink sink{out, family_tag(spec)};
    pre_lie_into(sink, x, y, scale, spec);
    pre_lie_into(sink, y, x, -sign_pow(dx * dy) * scale, spec);
}

bool is_zero(const CoeffMap& m) {
    for (const auto& [k, c] : m)
        if (c != 0) return false;
    return true;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? UINT64_MAX : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

// Cyclic maps from k half-edges to a boundary with N corners: N * C(N+k-1, k-1).
std::uint64_t cyclic_maps(std::uint64_t N, std::uint64_t k) {
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i < k; ++i) {
        // C(N+i, i) from C(N+i-1, i-1); exact at every step
        unsigned __int128 t = static_cast<unsigned __int128>(c) * (N + i) / i;
        if (t > UINT64_MAX) return UINT64_MAX;
        c = static_cast<std::uint64_t>(t);
    }
    return sat_mul(N, c);
}

std::uint64_t pre_lie_count(const OrientedGraph& x, const OrientedGraph& y) {
    const std::uint64_t N = y.g.graph.n_half();
    std::uint64_t total = 0;
    for (int v = 0; v < x.g.graph.num_vertices(); ++v) total = sat_add(total, cyclic_maps(N, x.g.graph.valency(v)));
    return total;
}

}  // namespace

std::uint64_t bracket_term_count(const ChainVector& x, const ChainVector& y) {
    std::uint64_t total = 0;
    for (const auto& [kx, tx] : x.terms())
        for (const auto& [ky, ty] : y.terms())
            total = sat_add(total, sat_add(pre_lie_count(*tx.rep, *ty.rep), pre_lie_count(*ty.rep, *tx.rep)));
    return total;
}

OrientedGraph unit_edge(const FamilySpec& spec) {
    check_lie_family(spec);
    OrientedGraph t;
    t.g.graph = RibbonGraph::from_trusted({0, 1}, {1, 0});
    if (spec.family == Family::ORGC1) t.g.tail = {1, 0};
    t.ori = reference_orientation(t.g, orientation_rule(spec));
    return t;
}

ChainVector as_chain(const OrientedGraph& g, const FamilySpec& spec) {
    ChainVector out;
    add_graph(out, g, 1, family_tag(spec), orientation_rule(spec));
    return out;
}

ChainVector rgc1_delta(const ChainVector& x, const FamilySpec& spec) {
    return bracket(as_chain(unit_edge(spec), spec), x, spec);
}

}  // namespace ribbon
