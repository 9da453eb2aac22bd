// Acceptance sweep: one PASS/FAIL line per criterion.  Pass criterion
// numbers as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "ribbon/canonical.hpp"
#include "ribbon/cohomology.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/verify.hpp"

using namespace ribbon;
using nlohmann::json;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

const std::vector<std::pair<int, int>> kTopologies = {{0, 3}, {0, 4}, {1, 1}, {1, 2}};

Outcome dsquared_suite() {
    int ok = 0, total = 0;
    std::string bad;
    for (auto fam : {Family::RGC, Family::ORGC})
        for (int d : {2, 3})
            for (auto [g, m] : kTopologies) {
                FamilySpec s;
                s.family = fam;
                s.d = d;
                s.g = g;
                s.m = m;
                auto j = check_dsquared(s, 8);
                ++total;
                if (j["passed"].get<bool>()) ++ok;
                else bad += " " + describe(s);
                clear_memo();
            }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " complexes, E<=8" + bad};
}

Outcome rgc_orgc_suite() {
    int ok = 0, total = 0;
    std::string rows;
    for (int d : {2, 3})
        for (auto [g, m] : kTopologies) {
            auto j = check_theorem11(d, g, m, true);
            ++total;
            if (j["passed"].get<bool>()) ++ok;
            rows += " d=" + std::to_string(d) + "(" + std::to_string(g) + "," + std::to_string(m) + "):";
            for (const auto& r : j["rows"])
                if (r["betti_rgc"].get<long long>() || r["betti_orgc"].get<long long>())
                    rows += std::to_string(r["degree"].get<int>()) + "=" + std::to_string(r["betti_rgc"].get<long long>()) +
                            "/" + std::to_string(r["betti_orgc"].get<long long>()) + ",";
            clear_memo();
        }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " agree; nonzero degree=rgc/orgc" + rows};
}

Outcome classical_pins() {
    auto j = check_classical();
    std::string detail;
    for (const auto& p : j["pins"]) detail += p["pin"].get<std::string>() + (p["passed"].get<bool>() ? " ok; " : " FAIL; ");
    clear_memo();
    return {j["passed"].get<bool>(), detail};
}

Outcome lie_axioms() {
    bool ok = true;
    std::string detail;
    for (auto [fam, d] : {std::pair{Family::RGC1, 2}, std::pair{Family::ORGC1, 3}}) {
        AxiomConfig cfg;
        cfg.family = fam;
        cfg.d = d;
        auto j = check_axioms(cfg);
        ok = ok && j["passed"].get<bool>();
        detail += std::string(family_name(fam)) + " d=" + std::to_string(d) + ": failures " +
                  j["failures_by_kind"].dump() + ", sampled triples over term limit " +
                  std::to_string(j["sampled_over_limit"].size()) + "/" + std::to_string(cfg.samples) + "; ";
        clear_memo();
    }
    return {ok, detail};
}

Outcome recolor() {
    int ok = 0, total = 0;
    for (int d : {2, 3})
        for (int g = 0; g <= 2; ++g) {
            auto j = check_recolor_acyclic(d, g, 5);
            ++total;
            if (j["passed"].get<bool>()) ++ok;
        }
    clear_memo();
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " (d,g) one-boundary complexes, E<=5"};
}

Outcome pcy_suite() {
    PcyConfig cfg;
    auto j = check_pcy(cfg);
    return {j["passed"].get<bool>(), "p+q<=6, <=2 vertices, <=" + std::to_string(cfg.max_parallel_edges) +
                                         " parallel edges; failures " + j["failures_by_kind"].dump()};
}

// Random connected graph with at most 16 half-edges and decorations of a
// random family.
struct RandomGraph {
    OrientedGraph og;
    FamilySpec spec;
};

RandomGraph random_graph(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> edges(1, 8);
    const std::vector<Family> fams = {Family::RGC, Family::ORGC, Family::RGC1, Family::ORGC1, Family::MIXED};
    while (true) {
        const int n = 2 * edges(rng);
        std::vector<int> s0(n), s1(n), p(n);
        std::iota(s0.begin(), s0.end(), 0);
        std::shuffle(s0.begin(), s0.end(), rng);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        for (int i = 0; i < n; i += 2) {
            s1[p[i]] = p[i + 1];
            s1[p[i + 1]] = p[i];
        }
        auto rg = RibbonGraph::build(s0, s1);
        if (!rg.is_connected()) continue;
        RandomGraph out;
        out.spec.family = fams[rng() % fams.size()];
        out.spec.d = 2 + static_cast<int>(rng() % 2);
        out.spec.m = static_cast<int>(boundaries(rg).size());
        out.spec.g = genus(rg);
        if ((out.spec.family == Family::RGC1 || out.spec.family == Family::ORGC1) && out.spec.m != 1) continue;
        auto& g = out.og.g;
        g.graph = rg;
        if (is_directed(out.spec.family)) {
            g.tail.assign(n, 0);
            for (int h = 0; h < n; ++h)
                if (h < s1[h]) g.tail[rng() % 2 ? h : s1[h]] = 1;
        }
        if (labels_boundaries(out.spec)) {
            std::vector<int> lab(out.spec.m);
            std::iota(lab.begin(), lab.end(), 0);
            std::shuffle(lab.begin(), lab.end(), rng);
            auto bi = boundary_index(rg);
            g.boundary_label.resize(n);
            for (int h = 0; h < n; ++h) g.boundary_label[h] = lab[bi[h]];
        }
        if (out.spec.family == Family::MIXED) {
            g.kind.assign(n, VertexKind::Black);
            for (int v = 0; v < rg.num_vertices(); ++v)
                if (rng() % 2)
                    for (int h : rg.vertex_half_edges(v)) g.kind[h] = VertexKind::White;
        }
        out.og.ori = reference_orientation(g, orientation_rule(out.spec));
        return out;
    }
}

int perm_sign(std::vector<int> p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            s = -s;
        }
    return s;
}

Outcome canonical_soundness() {
    std::mt19937_64 rng(20260101);
    std::size_t graphs = 0, zero = 0, bad_key = 0, bad_sign = 0, bad_rep = 0;
    for (int t = 0; t < 10000; ++t) {
        auto r = random_graph(rng);
        const auto tag = family_tag(r.spec);
        const auto rule = orientation_rule(r.spec);
        auto a = canonical_form(r.og, tag);
        ++graphs;
        if (a.is_zero) ++zero;
        else {
            // a = sign * representative, and the representative is canonical
            auto rep = canonical_representative(r.og, a, rule);
            auto c = canonical_form(rep, tag);
            if (c.key != a.key || c.sign != 1) ++bad_rep;
        }
        for (int k = 0; k < 3; ++k) {
            std::vector<int> p(r.og.g.graph.n_half());
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            auto moved = relabel(r.og, p);
            std::vector<int> pi(moved.ori.items.size());
            std::iota(pi.begin(), pi.end(), 0);
            std::shuffle(pi.begin(), pi.end(), rng);
            auto items = moved.ori.items;
            for (std::size_t i = 0; i < pi.size(); ++i) moved.ori.items[i] = items[pi[i]];
            auto b = canonical_form(moved, tag);
            if (b.key != a.key || b.is_zero != a.is_zero) ++bad_key;
            else if (!a.is_zero && b.sign != a.sign * perm_sign(pi)) ++bad_sign;
        }
    }

    std::size_t basis_zero = 0, basis_checked = 0;
    for (auto fam : {Family::RGC, Family::ORGC})
        for (int d : {2, 3})
            for (auto [g, m] : kTopologies) {
                FamilySpec s;
                s.family = fam;
                s.d = d;
                s.g = g;
                s.m = m;
                auto [lo, hi] = edge_window(s, 6);
                for (int k = lo; k <= hi; ++k)
                    for (const auto& rep : basis(s, k)->reps) {
                        ++basis_checked;
                        auto cf = canonical_form(*rep, family_tag(s));
                        if (cf.is_zero || cf.sign != 1) ++basis_zero;
                    }
                clear_memo();
            }

    FamilySpec planted;
    planted.family = Family::RGC1;
    planted.d = 2;
    planted.g = 1;
    OrientedGraph two_loops;
    two_loops.g.graph = RibbonGraph::build({1, 2, 3, 0}, {2, 3, 0, 1});
    two_loops.ori = reference_orientation(two_loops.g, orientation_rule(planted));
    const bool planted_zero = canonical_form(two_loops, family_tag(planted)).is_zero &&
                              basis(planted, degree_for_edges(planted, 2))->size() == 0;
    clear_memo();

    const bool ok = bad_key == 0 && bad_sign == 0 && bad_rep == 0 && basis_zero == 0 && planted_zero;
    std::ostringstream os;
    os << graphs << " random graphs (" << zero << " zero classes), key mismatches " << bad_key
       << ", sign mismatches " << bad_sign << ", representative mismatches " << bad_rep << "; " << basis_checked
       << " basis elements, " << basis_zero << " zero or unnormalized; planted odd automorphism "
       << (planted_zero ? "detected" : "MISSED");
    return {ok, os.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
    const auto tmp = std::filesystem::temp_directory_path() / ("ribbon_determinism_" + std::to_string(::getpid()));
    std::filesystem::remove_all(tmp);
    std::filesystem::create_directories(tmp);
    const std::vector<std::string> runs = {
        "verify --check pcy --d 2 --max-hairs 4 --samples 40 --seed 17",
        "verify --check axioms --family rgc1 --d 2 --g 1 --sampled-max-edges 5 --samples 12 --seed 17 --term-limit 2000000",
        "verify --check dsquared --family orgc --d 3 --g 1 --m 2 --max-edges 6",
        "verify --check classical",
    };
    bool ok = true;
    int same = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        std::string out[2];
        int rc[2];
        for (int k = 0; k < 2; ++k) {
            auto cache = tmp / ("cache" + std::to_string(i) + "_" + std::to_string(k));
            auto file = tmp / ("report" + std::to_string(i) + "_" + std::to_string(k) + ".json");
            std::string cmd = std::string(RIBBON_CLI) + " " + runs[i] + " --cache-dir " + cache.string() + " --out " +
                              file.string() + " 2>/dev/null";
            rc[k] = WEXITSTATUS(std::system(cmd.c_str()));
            out[k] = slurp(file);
        }
        // a failing or resource-limited check still has to report the same way
        if (!out[0].empty() && out[0] == out[1] && rc[0] == rc[1] && rc[0] != 2) ++same;
        else ok = false;
    }
    std::filesystem::remove_all(tmp);
    return {ok, std::to_string(same) + "/" + std::to_string(runs.size()) + " verify commands byte-identical across cold runs"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"delta squared zero (RGC/ORGC, d=2,3)", dsquared_suite},
        {"RGC_d and ORGC_{d+1} Betti agreement", rgc_orgc_suite},
        {"classical pins", classical_pins},
        {"Lie axioms", lie_axioms},
        {"recoloring acyclicity", recolor},
        {"PCY_2 suite", pcy_suite},
        {"canonicalization soundness", canonical_soundness},
        {"determinism of verify reports", determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(n)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.passed) ++failed;
        std::printf("criterion %d %s: %s -- %s [%.1fs]\n", n, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
