#include "ribbon/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "ribbon/canonical.hpp"
#include "ribbon/differential.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/pcy.hpp"
#include "ribbon/quiver.hpp"

namespace ribbon {

namespace {

constexpr std::uint8_t kBareTag = 0xff;

std::mutex memo_mutex;
std::map<std::tuple<int, int, int>, std::vector<RibbonGraph>> graph_memo;
std::map<std::string, std::shared_ptr<const GradedBasis>> basis_memo;
BasisStore* store = nullptr;

void matchings(std::vector<int>& s1, std::vector<RibbonGraph>& out, std::set<std::string>& seen, int g, int m) {
    const int n = static_cast<int>(s1.size());
    int first = -1;
    for (int h = 0; h < n; ++h)
        if (s1[h] < 0) { first = h; break; }
    if (first < 0) {
        std::vector<int> s0(n);
        for (int h = 0; h < n; ++h) s0[h] = (h + 1) % n;
        auto rg = RibbonGraph::from_trusted(std::move(s0), s1);
        if (static_cast<int>(boundaries(rg).size()) != m || genus(rg) != g) return;
        OrientedGraph og;
        og.g.graph = rg;
        auto cf = canonical_form(og, kBareTag);
        if (seen.insert(cf.key).second) out.push_back(relabel(og, cf.relabel).g.graph);
        return;
    }
    for (int h = first + 1; h < n; ++h) {
        if (s1[h] >= 0) continue;
        s1[first] = h;
        s1[h] = first;
        matchings(s1, out, seen, g, m);
        s1[first] = s1[h] = -1;
    }
}

std::vector<RibbonGraph> build_level(int g, int m, int vertices, const std::vector<RibbonGraph>* prev) {
    std::vector<RibbonGraph> out;
    std::set<std::string> seen;
    if (vertices == 1) {
        const int e = 2 * g - 2 + m + 1;
        if (e < 1) return out;
        std::vector<int> s1(2 * e, -1);
        matchings(s1, out, seen, g, m);
        return out;
    }
    std::vector<std::pair<std::string, RibbonGraph>> found;
    for (const auto& rg : *prev) {
        OrientedGraph og;
        og.g.graph = rg;
        for (int v = 0; v < rg.num_vertices(); ++v) {
            const int k = rg.valency(v);
            for (int len = 1; len < k; ++len) {
                for (int j = 0; j < len; ++j) {
                    auto t = split_raw(og, v, (k - j) % k, len);
                    auto cf = canonical_form(t, kBareTag);
                    if (seen.insert(cf.key).second) found.emplace_back(cf.key, relabel(t, cf.relabel).g.graph);
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

std::string memo_key(const FamilySpec& s, int degree) {
    std::string k = describe(s);
    k += " deg=" + std::to_string(degree);
    return k;
}

void decorate(const FamilySpec& spec, const Support& sup, GradedBasis& out) {
    const auto rule = orientation_rule(spec);
    const auto tag = family_tag(spec);
    const bool directed = is_directed(spec.family);
    const int black_needed = spec.family == Family::MIXED ? sup.degree + spec.d * spec.euler() : -1;

    std::vector<int> perm(spec.m);
    for (const auto& rg : underlying_graphs(spec.g, spec.m, sup.vertices)) {
        bool has3 = false;
        for (int v = 0; v < rg.num_vertices(); ++v) has3 = has3 || rg.valency(v) >= 3;
        if (!has3) continue;

        std::vector<Directions> dirs;
        if (directed) dirs = acyclic_orientations(rg);
        else dirs.emplace_back();

        const auto bidx = boundary_index(rg);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (const auto& tail : dirs) {
                OrientedGraph og;
                og.g.graph = rg;
                og.g.tail = tail;
                if (labels_boundaries(spec)) {
                    og.g.boundary_label.resize(rg.n_half());
                    for (int h = 0; h < rg.n_half(); ++h) og.g.boundary_label[h] = perm[bidx[h]];
                }
                if (spec.drop_passing && has_passing_vertex(og.g)) continue;

                std::vector<std::vector<VertexKind>> colorings;
                if (spec.family == Family::MIXED) {
                    auto sk = sinks(og.g);
                    const int white = rg.num_vertices() - black_needed;
                    if (white < 0 || white > static_cast<int>(sk.size())) continue;
                    std::vector<char> choose(sk.size(), 0);
                    std::fill(choose.begin(), choose.begin() + white, 1);
                    std::sort(choose.begin(), choose.end());
                    do {
                        std::vector<VertexKind> kind(rg.n_half(), VertexKind::Black);
                        for (std::size_t i = 0; i < sk.size(); ++i)
                            if (choose[i])
                                for (int h : rg.vertex_half_edges(sk[i])) kind[h] = VertexKind::White;
                        colorings.push_back(std::move(kind));
                    } while (std::next_permutation(choose.begin(), choose.end()));
                } else {
                    colorings.emplace_back();
                }

                for (auto& kind : colorings) {
                    og.g.kind = kind;
                    og.ori = reference_orientation(og.g, rule);
                    auto cf = canonical_form(og, tag);
                    if (cf.is_zero || out.find(cf.key)) continue;
                    out.add(cf.key, std::make_shared<OrientedGraph>(canonical_representative(og, cf, rule)));
                }
            }
        } while (labels_boundaries(spec) && std::next_permutation(perm.begin(), perm.end()));
    }
}

}  // namespace

const std::vector<RibbonGraph>& underlying_graphs(int g, int m, int vertices) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = graph_memo.find({g, m, vertices});
        if (it != graph_memo.end()) return it->second;
    }
    const std::vector<RibbonGraph>* prev = nullptr;
    if (vertices > 1) prev = &underlying_graphs(g, m, vertices - 1);
    auto level = build_level(g, m, vertices, prev);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return graph_memo.emplace(std::make_tuple(g, m, vertices), std::move(level)).first->second;
}

void GradedBasis::add(std::string key, std::shared_ptr<const OrientedGraph> rep) {
    index.emplace(key, keys.size());
    keys.push_back(std::move(key));
    reps.push_back(std::move(rep));
}

void GradedBasis::finalize() {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::string> k2;
    std::vector<std::shared_ptr<const OrientedGraph>> r2;
    for (auto i : order) {
        k2.push_back(std::move(keys[i]));
        r2.push_back(std::move(reps[i]));
    }
    keys = std::move(k2);
    reps = std::move(r2);
    index.clear();
    for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
}

std::shared_ptr<const GradedBasis> basis(const FamilySpec& spec, int degree) {
    const auto mk = memo_key(spec, degree);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = basis_memo.find(mk);
        if (it != basis_memo.end()) return it->second;
    }
    std::shared_ptr<const GradedBasis> out = store ? store->load(spec, degree) : nullptr;
    if (!out) {
        auto fresh = std::make_shared<GradedBasis>();
        fresh->spec = spec;
        fresh->degree = degree;
        if (spec.family == Family::PCY) {
            *fresh = pcy_basis(spec, degree);
        } else if (auto sup = support_for_degree(spec, degree)) {
            decorate(spec, *sup, *fresh);
            fresh->finalize();
        }
        if (store) store->save(*fresh);
        out = std::move(fresh);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    return basis_memo.emplace(mk, std::move(out)).first->second;
}

void set_basis_store(BasisStore* s) {
    std::lock_guard<std::mutex> lock(memo_mutex);
    store = s;
}

void clear_memo() {
    std::lock_guard<std::mutex> lock(memo_mutex);
    graph_memo.clear();
    basis_memo.clear();
}

}  // namespace ribbon
