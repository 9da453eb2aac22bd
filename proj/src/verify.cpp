#include "ribbon/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ribbon/cache.hpp"
#include "ribbon/canonical.hpp"
#include "ribbon/differential.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/io.hpp"
#include "ribbon/liealg.hpp"
#include "ribbon/pcy.hpp"

namespace ribbon {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedFailures = 20;

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

int max_edges_of(int g, int m) { return 6 * g - 6 + 3 * m; }

void note_failure(json& failures, json entry) {
    if (failures.size() < kMaxListedFailures) failures.push_back(std::move(entry));
}

ChainVector difference(const ChainVector& a, const ChainVector& b) {
    ChainVector out = a;
    out.add(b, -1);
    return out;
}

// Short stable name for a canonical key in reports.
std::string key_id(const std::string& key) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return buf;
}

}  // namespace

json check_dsquared(const FamilySpec& spec, int max_edges, int workers) {
    if (spec.family != Family::RGC && spec.family != Family::ORGC)
        throw RibbonError(ErrorCode::WrongFamily, "dsquared sweeps RGC and ORGC");
    const auto [lo, hi] = edge_window(spec, max_edges);
    json rows = json::array();
    bool passed = true;
    for (int k = lo; k + 2 <= hi; ++k) {
        auto b0 = basis(spec, k), b1 = basis(spec, k + 1), b2 = basis(spec, k + 2);
        bool zero = true;
        std::size_t nnz0 = 0, nnz1 = 0;
        if (b0->size() && b1->size() && b2->size()) {
            auto d0 = assemble(*b0, *b1, spec, workers);
            auto d1 = assemble(*b1, *b2, spec, workers);
            nnz0 = d0.nnz();
            nnz1 = d1.nnz();
            zero = multiply(d1, d0).is_zero();
        }
        passed = passed && zero;
        rows.push_back({{"degree", k},
                        {"edges", k - degree_for_edges(spec, 0)},
                        {"dims", {b0->size(), b1->size(), b2->size()}},
                        {"nnz", {nnz0, nnz1}},
                        {"zero", zero}});
    }
    return {{"check", "dsquared"}, {"spec", to_json(spec)}, {"max_edges", max_edges}, {"pairs", rows},
            {"passed", passed}};
}

json check_theorem11(int d, int g, int m, bool drop_passing, std::uint32_t prime, int workers) {
    auto rep = compare_rgc_orgc(d, g, m, max_edges_of(g, m), drop_passing, prime, workers);
    json j = to_json(rep);
    j["check"] = "theorem11";
    j["prime"] = prime;
    j["passed"] = rep.agree;
    return j;
}

json check_axioms(const AxiomConfig& cfg) {
    FamilySpec spec;
    spec.family = cfg.family;
    spec.d = cfg.d;
    spec.g = cfg.g;
    spec.m = 1;
    validate(spec);

    struct Gen {
        ChainVector chain;
        int edges;
        int degree;
        std::string id;
    };
    std::vector<Gen> gens;
    const int top = std::max(cfg.exhaustive_max_edges, cfg.sampled_max_edges);
    const auto [lo, hi] = edge_window(spec, top);
    for (int k = lo; k <= hi; ++k) {
        auto b = basis(spec, k);
        for (std::size_t i = 0; i < b->size(); ++i)
            gens.push_back({as_chain(*b->reps[i], spec), k - degree_for_edges(spec, 0), k, key_id(b->keys[i])});
    }
    std::vector<std::size_t> small, sampled_pool;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].edges <= cfg.exhaustive_max_edges) small.push_back(i);
        if (gens[i].edges <= cfg.sampled_max_edges) sampled_pool.push_back(i);
    }

    json failures = json::array();
    const ChainVector tau = as_chain(unit_edge(spec), spec);

    std::map<std::pair<std::size_t, std::size_t>, ChainVector> inner;
    auto br = [&](std::size_t i, std::size_t j) -> const ChainVector& {
        auto it = inner.find({i, j});
        if (it == inner.end()) it = inner.emplace(std::make_pair(i, j), bracket(gens[i].chain, gens[j].chain, spec)).first;
        return it->second;
    };

    // Antisymmetry and Leibniz on pairs.
    std::size_t pairs_checked = 0, antisym_fail = 0, leibniz_fail = 0;
    auto check_pair = [&](std::size_t i, std::size_t j) {
        ++pairs_checked;
        const auto& x = gens[i];
        const auto& y = gens[j];
        ChainVector s = br(i, j);
        s.add(br(j, i), sign_pow(static_cast<long>(x.degree) * y.degree));
        if (!s.is_zero()) {
            ++antisym_fail;
            note_failure(failures, {{"kind", "antisymmetry"}, {"x", x.id}, {"y", y.id}});
        }
        // delta[x,y] = [delta x, y] + (-1)^{|x|} [x, delta y]
        const ChainVector dx = bracket(tau, x.chain, spec), dy = bracket(tau, y.chain, spec);
        CoeffMap l;
        bracket_into(l, tau, br(i, j), 1, spec);
        bracket_into(l, dx, y.chain, -1, spec);
        bracket_into(l, x.chain, dy, -sign_pow(x.degree), spec);
        if (!is_zero(l)) {
            ++leibniz_fail;
            note_failure(failures, {{"kind", "leibniz"}, {"x", x.id}, {"y", y.id}});
        }
    };

    std::size_t triples_checked = 0, jacobi_fail = 0;
    json over_limit = json::array();
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k, bool sampled) {
        const auto& x = gens[i];
        const auto& y = gens[j];
        const auto& z = gens[k];
        const ChainVector& yz = br(j, k);
        const ChainVector& zx = br(k, i);
        const ChainVector& xy = br(i, j);
        if (sampled) {
            std::uint64_t cost = bracket_term_count(x.chain, yz);
            cost += bracket_term_count(y.chain, zx);
            cost += bracket_term_count(z.chain, xy);
            if (cost > cfg.term_limit) {
                over_limit.push_back({{"triple", {i, j, k}}, {"terms", cost}});
                return;
            }
        }
        ++triples_checked;
        CoeffMap jac;
        bracket_into(jac, x.chain, yz, sign_pow(static_cast<long>(x.degree) * z.degree), spec);
        bracket_into(jac, y.chain, zx, sign_pow(static_cast<long>(y.degree) * x.degree), spec);
        bracket_into(jac, z.chain, xy, sign_pow(static_cast<long>(z.degree) * y.degree), spec);
        if (!is_zero(jac)) {
            ++jacobi_fail;
            note_failure(failures, {{"kind", "jacobi"}, {"x", x.id}, {"y", y.id}, {"z", z.id}});
        }
    };

    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = a; b < small.size(); ++b) check_pair(small[a], small[b]);
    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = a; b < small.size(); ++b)
            for (std::size_t c = b; c < small.size(); ++c) check_triple(small[a], small[b], small[c], false);
    const std::size_t exhaustive_triples = triples_checked;

    json drawn = json::array();
    std::mt19937_64 rng(cfg.seed);
    if (!sampled_pool.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, sampled_pool.size() - 1);
        for (int s = 0; s < cfg.samples; ++s) {
            std::size_t i = sampled_pool[pick(rng)], j = sampled_pool[pick(rng)], k = sampled_pool[pick(rng)];
            drawn.push_back({i, j, k});
            check_pair(i, j);
            check_triple(i, j, k, true);
        }
    }
    const std::size_t sampled_checked = triples_checked - exhaustive_triples;

    // delta^2 = 0 and the comparison with the splitting differential.
    std::size_t dsq_fail = 0, split_fail = 0;
    std::map<int, Rational> ratio_by_degree;
    for (const auto& x : gens) {
        if (x.edges > cfg.sampled_max_edges) continue;
        const ChainVector dx = bracket(tau, x.chain, spec);
        if (!bracket(tau, dx, spec).is_zero()) {
            ++dsq_fail;
            note_failure(failures, {{"kind", "delta_squared"}, {"x", x.id}});
        }
        const ChainVector sx = split_vertex_terms(*x.chain.terms().begin()->second.rep, spec);
        if (sx.size() != dx.size()) {
            ++split_fail;
            note_failure(failures, {{"kind", "split_support"}, {"x", x.id}});
            continue;
        }
        for (const auto& [key, t] : sx.terms()) {
            const Rational r = dx.coefficient(key) / t.coeff;
            auto [it, fresh] = ratio_by_degree.emplace(x.degree, r);
            if (!fresh && it->second != r) {
                ++split_fail;
                note_failure(failures, {{"kind", "split_ratio"}, {"x", x.id}});
                break;
            }
        }
    }
    json ratios = json::array();
    for (const auto& [deg, r] : ratio_by_degree) ratios.push_back({{"degree", deg}, {"ratio", r.get_str()}});

    json gen_list = json::array();
    for (std::size_t i = 0; i < gens.size(); ++i)
        gen_list.push_back({{"index", i}, {"id", gens[i].id}, {"edges", gens[i].edges}, {"degree", gens[i].degree}});

    const bool passed = antisym_fail == 0 && leibniz_fail == 0 && jacobi_fail == 0 && dsq_fail == 0 &&
                        split_fail == 0 && over_limit.empty() &&
                        sampled_checked >= static_cast<std::size_t>(cfg.samples);
    return {{"check", "axioms"},
            {"spec", to_json(spec)},
            {"seed", cfg.seed},
            {"exhaustive_max_edges", cfg.exhaustive_max_edges},
            {"sampled_max_edges", cfg.sampled_max_edges},
            {"samples", cfg.samples},
            {"term_limit", cfg.term_limit},
            {"generators", gen_list},
            {"exhaustive_triples", exhaustive_triples},
            {"sampled_triples", drawn},
            {"sampled_checked", sampled_checked},
            {"sampled_over_limit", over_limit},
            {"pairs_checked", pairs_checked},
            {"failures_by_kind",
             {{"antisymmetry", antisym_fail},
              {"leibniz", leibniz_fail},
              {"jacobi", jacobi_fail},
              {"delta_squared", dsq_fail},
              {"split", split_fail}}},
            {"delta_over_split", ratios},
            {"failures", failures},
            {"resource_limited", !over_limit.empty()},
            {"passed", passed}};
}

json check_recolor_acyclic(int d, int g, int max_edges, std::uint32_t prime) {
    FamilySpec spec;
    spec.family = Family::MIXED;
    spec.d = d;
    spec.g = g;
    spec.m = 1;
    const int c = spec.euler();
    json rows = json::array();
    bool passed = true;
    for (int e = std::max(1, c + 1); e <= max_edges; ++e) {
        spec.edges = e;
        const int v = e - c;
        // black vertex counts 0..v
        const int lo = -d * c, hi = v - d * c;
        auto rep = cohomology(spec, lo, hi, prime);
        long long total = 0;
        std::size_t dims = 0;
        for (const auto& dr : rep.degrees) {
            total += dr.betti;
            dims += dr.dim;
        }
        passed = passed && total == 0;
        json r = to_json(rep);
        r["edges"] = e;
        r["total_dim"] = dims;
        r["total_betti"] = total;
        rows.push_back(std::move(r));
    }
    return {{"check", "recolor-acyclic"}, {"d", d}, {"g", g}, {"max_edges", max_edges}, {"pieces", rows},
            {"passed", passed}};
}

json check_pcy(const PcyConfig& cfg) {
    const auto spec = pcy_spec(cfg.d);
    struct Piece {
        int p, q, v, e;
        std::size_t size;
    };
    std::vector<Piece> shape;
    for (int hairs = 2; hairs <= cfg.max_hairs; ++hairs)
        for (int q = 1; q < hairs; ++q)
            for (int v = 1; v <= cfg.max_vertices; ++v)
                for (int e = (v == 1 ? 0 : 1); e <= (v == 1 ? 0 : cfg.max_parallel_edges); ++e)
                    shape.push_back({hairs - q, q, v, e, 0});

    // First pass sizes the pieces so samples can be drawn by global index;
    // the second streams through them.
    std::size_t total = 0;
    for (auto& pc : shape) {
        pc.size = pcy_generators(cfg.d, pc.p, pc.q, pc.v, pc.e).size();
        total += pc.size;
    }
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::pair<std::size_t, std::size_t>> picks;
    if (total > 0) {
        std::uniform_int_distribution<std::size_t> pick(0, total - 1);
        for (int s = 0; s < cfg.samples; ++s) {
            const std::size_t a = pick(rng);
            picks.emplace_back(a, pick(rng));
        }
    }
    std::map<std::size_t, std::shared_ptr<const OrientedGraph>> kept;
    for (auto [a, b] : picks) kept[a] = kept[b] = nullptr;

    json pieces = json::array();
    json failures = json::array();
    std::size_t dsq_fail = 0, nonzero_delta = 0, offset = 0;
    for (const auto& pc : shape) {
        if (pc.size == 0) continue;
        auto b = pcy_generators(cfg.d, pc.p, pc.q, pc.v, pc.e);
        pieces.push_back({{"p", pc.p}, {"q", pc.q}, {"vertices", pc.v}, {"edges", pc.e}, {"degree", b.degree},
                          {"size", b.size()}});
        for (std::size_t i = 0; i < b.size(); ++i) {
            const auto& g = b.reps[i];
            auto it = kept.find(offset + i);
            if (it != kept.end()) it->second = g;
            const ChainVector dg = pcy_delta(*g, cfg.d);
            if (!dg.is_zero()) ++nonzero_delta;
            if (!pcy_delta(dg, cfg.d).is_zero()) {
                ++dsq_fail;
                note_failure(failures, {{"kind", "delta_squared"}, {"graph", to_json(*g)}});
            }
        }
        offset += b.size();
    }

    auto hairs_of = [](const OrientedGraph& g, VertexKind k) {
        std::vector<int> labels;
        for (int h = 0; h < g.g.graph.n_half(); ++h)
            if (g.g.kind_of(h) == k) labels.push_back(g.g.hair_label[h]);
        std::sort(labels.begin(), labels.end());
        return labels;
    };

    std::size_t degree_fail = 0, leibniz_fail = 0, nontrivial = 0;
    json drawn = json::array();
    for (std::size_t s = 0; s < picks.size(); ++s) {
        const auto& g1 = *kept.at(picks[s].first);
        const auto& g2 = *kept.at(picks[s].second);
        const auto ins = hairs_of(g1, VertexKind::InHair);
        const auto outs = hairs_of(g2, VertexKind::OutHair);
        const int il = ins[std::uniform_int_distribution<std::size_t>(0, ins.size() - 1)(rng)];
        const int ol = outs[std::uniform_int_distribution<std::size_t>(0, outs.size() - 1)(rng)];
        const std::vector<HairMatch> mt{{ol, il}};
        drawn.push_back({{"left", picks[s].first}, {"right", picks[s].second}, {"in_label", il}, {"out_label", ol}});

        const ChainVector x = [&] {
            ChainVector c;
            add_graph(c, g1, 1, family_tag(spec), orientation_rule(spec));
            return c;
        }();
        const ChainVector y = [&] {
            ChainVector c;
            add_graph(c, g2, 1, family_tag(spec), orientation_rule(spec));
            return c;
        }();
        const int dx = degree_of(spec, g1.g), dy = degree_of(spec, g2.g);
        const ChainVector xy = compose(x, mt, y, cfg.d);
        for (const auto& [k, t] : xy.terms()) {
            if (degree_of(spec, t.rep->g) != dx + dy) {
                ++degree_fail;
                note_failure(failures, {{"kind", "compose_degree"}, {"sample", s}});
            }
        }
        // delta(x o y) = delta x o y + (-1)^{|x|} x o delta y
        ChainVector rhs = compose(pcy_delta(x, cfg.d), mt, y, cfg.d);
        rhs.add(compose(x, mt, pcy_delta(y, cfg.d), cfg.d), sign_pow(dx));
        const ChainVector lhs = pcy_delta(xy, cfg.d);
        if (!lhs.is_zero()) ++nontrivial;
        if (!difference(lhs, rhs).is_zero()) {
            ++leibniz_fail;
            note_failure(failures, {{"kind", "leibniz"}, {"sample", s}});
        }
    }

    const bool passed = dsq_fail == 0 && degree_fail == 0 && leibniz_fail == 0;
    return {{"check", "pcy"},
            {"d", cfg.d},
            {"max_hairs", cfg.max_hairs},
            {"max_vertices", cfg.max_vertices},
            {"max_parallel_edges", cfg.max_parallel_edges},
            {"seed", cfg.seed},
            {"pieces", pieces},
            {"generators", total},
            {"generators_with_nonzero_delta", nonzero_delta},
            {"samples", cfg.samples},
            {"matchings", drawn},
            {"leibniz_nontrivial", nontrivial},
            {"failures_by_kind", {{"delta_squared", dsq_fail}, {"compose_degree", degree_fail}, {"leibniz", leibniz_fail}}},
            {"failures", failures},
            {"passed", passed}};
}

json check_classical(std::uint32_t prime, int workers) {
    json pins = json::array();
    bool passed = true;
    auto betti_vector = [](const RankReport& r) {
        json v = json::object();
        for (const auto& d : r.degrees) v[std::to_string(d.degree)] = d.betti;
        return v;
    };
    auto one_dim_at = [](const RankReport& r, int degree) {
        long long total = 0, at = 0;
        for (const auto& d : r.degrees) {
            total += d.betti;
            if (d.degree == degree) at = d.betti;
        }
        return total == 1 && at == 1;
    };

    const int d = 2;
    FamilySpec m03;
    m03.family = Family::RGC;
    m03.d = d;
    m03.g = 0;
    m03.m = 3;
    auto [lo1, hi1] = edge_window(m03, max_edges_of(0, 3));
    auto r1 = cohomology(m03, lo1, hi1, prime, workers);
    const bool ok1 = one_dim_at(r1, 3 - 2 * d);
    pins.push_back({{"pin", "RGC_2 (0,3)"}, {"expected_degree", 3 - 2 * d}, {"betti", betti_vector(r1)}, {"passed", ok1}});

    FamilySpec rg;
    rg.family = Family::RGC1;
    rg.d = d;
    rg.g = 1;
    rg.m = 1;
    auto [lo2, hi2] = edge_window(rg, max_edges_of(1, 1));
    auto r2 = cohomology(rg, lo2, hi2, prime, workers);
    const bool ok2 = one_dim_at(r2, 3 - 2 * d);
    pins.push_back({{"pin", "rgc_2 genus 1"}, {"expected_degree", 3 - 2 * d}, {"betti", betti_vector(r2)}, {"passed", ok2}});

    FamilySpec og = rg;
    og.family = Family::ORGC1;
    og.d = d + 1;
    auto r3 = cohomology(og, lo2, hi2, prime, workers);
    const bool ok3 = betti_vector(r3) == betti_vector(r2);
    pins.push_back({{"pin", "orgc_3 genus 1 matches rgc_2"}, {"betti_rgc", betti_vector(r2)},
                    {"betti_orgc", betti_vector(r3)}, {"passed", ok3}});

    passed = ok1 && ok2 && ok3;
    return {{"check", "classical"}, {"prime", prime}, {"pins", pins}, {"passed", passed}};
}

}  // namespace ribbon
