// ribbon: enumerate bases, export differentials, compute cohomology and run
// the verification checks.  Exit codes: 0 pass, 1 assertion failure,
// 2 usage or configuration error, 3 resource limit.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbon/cache.hpp"
#include "ribbon/cohomology.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/io.hpp"
#include "ribbon/verify.hpp"
#include "ribbon/version.hpp"

using namespace ribbon;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

struct Config {
    std::string family = "rgc";
    int d = 2;
    int g = 0;
    int m = 1;
    std::optional<int> degree, lo, hi, max_edges, edges, vertices;
    int p = 0, q = 0;
    bool drop_passing = false;
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    std::string cache_dir;
    bool no_cache = false;
    std::string format = "json";
    std::string out;
    int workers = 1;
    bool timing = false;

    // verify
    std::string check;
    int samples = -1;
    int exhaustive_max_edges = 4;
    int sampled_max_edges = 6;
    std::uint64_t term_limit = AxiomConfig{}.term_limit;
    int max_hairs = 6;
    int max_parallel_edges = 3;
};

json config_json(const Config& c, const std::string& command) {
    json j{{"command", command}, {"family", c.family}, {"d", c.d}, {"g", c.g}, {"m", c.m},
           {"prime", c.prime}, {"seed", c.seed}, {"format", c.format}, {"drop_passing", c.drop_passing}};
    auto opt = [&](const char* name, const std::optional<int>& v) {
        if (v) j[name] = *v;
    };
    opt("degree", c.degree);
    opt("lo", c.lo);
    opt("hi", c.hi);
    opt("max_edges", c.max_edges);
    opt("edges", c.edges);
    opt("vertices", c.vertices);
    if (c.family == "pcy") {
        j["p"] = c.p;
        j["q"] = c.q;
    }
    if (command == "verify") {
        j["check"] = c.check;
        if (c.samples >= 0) j["samples"] = c.samples;
        if (c.check == "axioms") {
            j["exhaustive_max_edges"] = c.exhaustive_max_edges;
            j["sampled_max_edges"] = c.sampled_max_edges;
            j["term_limit"] = c.term_limit;
        }
        if (c.check == "pcy") {
            j["max_hairs"] = c.max_hairs;
            j["max_parallel_edges"] = c.max_parallel_edges;
        }
    }
    return j;
}

FamilySpec spec_of(const Config& c) {
    auto f = parse_family(c.family);
    if (!f) throw RibbonError(ErrorCode::Config, "unknown family '" + c.family + "'");
    FamilySpec s;
    s.family = *f;
    s.d = c.d;
    s.g = c.g;
    s.m = c.m;
    s.edges = c.edges;
    s.vertices = c.vertices;
    s.p = c.p;
    s.q = c.q;
    s.drop_passing = c.drop_passing;
    validate(s);
    return s;
}

std::pair<int, int> window_of(const Config& c, const FamilySpec& s) {
    if (c.lo && c.hi) return {*c.lo, *c.hi};
    if (c.degree) return {*c.degree, *c.degree};
    if (c.max_edges) {
        if (s.family == Family::MIXED || s.family == Family::PCY)
            throw RibbonError(ErrorCode::Config, "--max-edges needs an edge-graded family; give --lo/--hi");
        return edge_window(s, *c.max_edges);
    }
    throw RibbonError(ErrorCode::Config, "give --degree, --lo/--hi or --max-edges");
}

// Writes to --out or stdout.
void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(c.out, std::ios::binary | std::ios::trunc);
    os << text;
    if (!os) throw RibbonError(ErrorCode::Config, "cannot write " + c.out);
}

json envelope(const Config& c, const std::string& command, json body, double seconds) {
    json j{{"version", std::string(version())}, {"config", config_json(c, command)}, {"report", std::move(body)}};
    if (c.timing) j["wall_seconds"] = seconds;
    return j;
}

int cmd_enumerate(const Config& c) {
    const auto spec = spec_of(c);
    const auto [lo, hi] = window_of(c, spec);
    std::string text;
    json summary = json::array();
    for (int k = lo; k <= hi; ++k) {
        auto b = basis(spec, k);
        std::ostringstream os;
        write_basis(os, *b);
        text += os.str();
        summary.push_back({{"degree", k}, {"size", b->size()}});
        std::cerr << describe(spec) << " degree " << k << ": " << b->size() << " generators\n";
    }
    if (c.format == "json" && c.out.empty()) {
        std::cout << summary.dump() << '\n';
        return kPass;
    }
    emit(c, text);
    return kPass;
}

int cmd_differential(const Config& c) {
    const auto spec = spec_of(c);
    if (!c.degree) throw RibbonError(ErrorCode::Config, "differential needs --degree");
    auto m = assemble(spec, *c.degree, c.workers);
    std::ostringstream os;
    write_matrix_market(os, m);
    emit(c, os.str());
    return kPass;
}

int cmd_cohomology(const Config& c, double& seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto spec = spec_of(c);
    const auto [lo, hi] = window_of(c, spec);
    auto rep = cohomology(spec, lo, hi, c.prime, c.workers);
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.format == "table") emit(c, format_table(rep));
    else emit(c, envelope(c, "cohomology", to_json(rep), seconds).dump(1) + "\n");
    return kPass;
}

int cmd_verify(const Config& c, double& seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    json body;
    if (c.check == "dsquared") {
        if (!c.max_edges) throw RibbonError(ErrorCode::Config, "dsquared needs --max-edges");
        body = check_dsquared(spec_of(c), *c.max_edges, c.workers);
    } else if (c.check == "theorem11") {
        body = check_theorem11(c.d, c.g, c.m, c.drop_passing, c.prime, c.workers);
    } else if (c.check == "axioms") {
        AxiomConfig a;
        auto f = parse_family(c.family);
        if (!f) throw RibbonError(ErrorCode::Config, "unknown family '" + c.family + "'");
        a.family = *f;
        a.d = c.d;
        a.g = c.g;
        a.exhaustive_max_edges = c.exhaustive_max_edges;
        a.sampled_max_edges = c.sampled_max_edges;
        if (c.samples >= 0) a.samples = c.samples;
        a.seed = c.seed;
        a.term_limit = c.term_limit;
        body = check_axioms(a);
    } else if (c.check == "recolor-acyclic") {
        body = check_recolor_acyclic(c.d, c.g, c.max_edges.value_or(5), c.prime);
    } else if (c.check == "pcy") {
        PcyConfig p;
        p.d = c.d;
        p.max_hairs = c.max_hairs;
        p.max_parallel_edges = c.max_parallel_edges;
        if (c.samples >= 0) p.samples = c.samples;
        p.seed = c.seed;
        body = check_pcy(p);
    } else if (c.check == "classical") {
        body = check_classical(c.prime, c.workers);
    } else {
        throw RibbonError(ErrorCode::Config, "unknown check '" + c.check + "'");
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool passed = body.value("passed", false);
    const bool limited = body.value("resource_limited", false);
    emit(c, envelope(c, "verify", std::move(body), seconds).dump(1) + "\n");
    if (passed) return kPass;
    return limited ? kResource : kFail;
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--family", c.family, "rgc, orgc, rgc1, orgc1, mixed or pcy");
    sub->add_option("--d", c.d, "degree parameter d");
    sub->add_option("--g", c.g, "genus");
    sub->add_option("--m", c.m, "number of boundaries");
    sub->add_option("--degree", c.degree);
    sub->add_option("--lo", c.lo);
    sub->add_option("--hi", c.hi);
    sub->add_option("--max-edges", c.max_edges);
    sub->add_option("--edges", c.edges, "edge count for families whose degree does not fix it");
    sub->add_option("--vertices", c.vertices, "internal vertex count (pcy)");
    sub->add_option("--p", c.p, "out-hairs (pcy)");
    sub->add_option("--q", c.q, "in-hairs (pcy)");
    sub->add_flag("--drop-passing", c.drop_passing, "quiver families without passing vertices");
    sub->add_option("--prime", c.prime, "prime for the modular rank cross-check");
    sub->add_option("--seed", c.seed);
    sub->add_option("--cache-dir", c.cache_dir, "persistent basis cache (env RIBBON_CACHE_DIR)");
    sub->add_flag("--no-cache", c.no_cache);
    sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "table", "matrix-market", "jsonl"}));
    sub->add_option("--out", c.out, "output file instead of stdout");
    sub->add_option("--workers", c.workers, "worker threads (env RIBBON_WORKERS)")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", c.timing, "embed wall-clock seconds in the report");
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    if (const char* w = std::getenv("RIBBON_WORKERS")) c.workers = std::max(1, std::atoi(w));
    if (const char* dir = std::getenv("RIBBON_CACHE_DIR")) c.cache_dir = dir;

    CLI::App app{"Exact cohomology of ribbon graph complexes"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);
    auto* en = app.add_subcommand("enumerate", "write the graded basis as JSON lines");
    auto* df = app.add_subcommand("differential", "write the differential leaving a degree as Matrix Market");
    auto* co = app.add_subcommand("cohomology", "Betti numbers over a degree window");
    auto* ve = app.add_subcommand("verify", "run a check; exit 0 iff it passes");
    for (auto* s : {en, df, co, ve}) add_common(s, c);
    ve->add_option("--check", c.check)
        ->required()
        ->check(CLI::IsMember({"dsquared", "theorem11", "axioms", "recolor-acyclic", "pcy", "classical"}));
    ve->add_option("--samples", c.samples, "random triples (axioms) or pairs (pcy)");
    ve->add_option("--exhaustive-max-edges", c.exhaustive_max_edges);
    ve->add_option("--sampled-max-edges", c.sampled_max_edges);
    ve->add_option("--term-limit", c.term_limit, "raw insertion terms allowed per sampled triple");
    ve->add_option("--max-hairs", c.max_hairs);
    ve->add_option("--max-parallel-edges", c.max_parallel_edges);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    std::unique_ptr<DiskCache> cache;
    double seconds = 0;
    const auto t0 = std::chrono::steady_clock::now();
    int rc = kPass;
    try {
        if (!c.cache_dir.empty() && !c.no_cache) {
            cache = std::make_unique<DiskCache>(c.cache_dir);
            set_basis_store(cache.get());
        }
        if (en->parsed()) rc = cmd_enumerate(c);
        else if (df->parsed()) rc = cmd_differential(c);
        else if (co->parsed()) rc = cmd_cohomology(c, seconds);
        else rc = cmd_verify(c, seconds);
    } catch (const RibbonError& e) {
        set_basis_store(nullptr);
        std::cerr << "error: " << e.what() << '\n';
        if (e.code() == ErrorCode::InfiniteDegreePiece && c.d == 1)
            std::cerr << "hint: at d = 1 the degree does not separate edge counts; pass --edges/--vertices or use d != 1\n";
        else if (e.code() == ErrorCode::InfiniteDegreePiece)
            std::cerr << "hint: pass --edges (and --vertices for pcy) to pick a finite piece\n";
        if (e.code() == ErrorCode::ResourceLimit) return kResource;
        return e.code() == ErrorCode::RankMismatch ? kFail : kUsage;
    } catch (const std::bad_alloc&) {
        set_basis_store(nullptr);
        std::cerr << "error: out of memory\n";
        return kResource;
    }
    set_basis_store(nullptr);
    if (seconds == 0) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "wall " << seconds << " s";
    if (cache) std::cerr << ", cache hits " << cache->hits() << ", misses " << cache->misses();
    std::cerr << '\n';
    return rc;
}
