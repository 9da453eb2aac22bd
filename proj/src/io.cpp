#include "ribbon/io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "ribbon/canonical.hpp"
#include "ribbon/errors.hpp"

namespace ribbon {

using nlohmann::json;

namespace {

const char* item_name(ItemKind k) {
    switch (k) {
    case ItemKind::Edge: return "E";
    case ItemKind::Vertex: return "V";
    case ItemKind::OutHair: return "O";
    case ItemKind::InHair: return "I";
    }
    return "?";
}

ItemKind item_from(const std::string& s) {
    if (s == "E") return ItemKind::Edge;
    if (s == "V") return ItemKind::Vertex;
    if (s == "O") return ItemKind::OutHair;
    if (s == "I") return ItemKind::InHair;
    throw RibbonError(ErrorCode::Config, "unknown orientation item " + s);
}

}  // namespace

json to_json(const OrientedGraph& og) {
    const auto& g = og.g;
    const int n = g.graph.n_half();
    json j;
    j["n_half"] = n;
    j["sigma0"] = std::vector<int>(g.graph.sigma0().begin(), g.graph.sigma0().end());
    j["sigma1"] = std::vector<int>(g.graph.sigma1().begin(), g.graph.sigma1().end());
    if (g.directed()) {
        std::vector<int> dirs;
        for (int h = 0; h < n; ++h)
            if (g.tail[h]) dirs.push_back(h);
        j["dirs"] = dirs;
    }
    if (!g.boundary_label.empty()) j["labels"] = g.boundary_label;
    if (!g.kind.empty()) {
        std::vector<int> kinds;
        for (auto k : g.kind) kinds.push_back(static_cast<int>(k));
        j["kinds"] = kinds;
        j["hair_labels"] = g.hair_label;
        json in = json::array(), out = json::array();
        for (int h = 0; h < n; ++h) {
            if (g.kind[h] == VertexKind::InHair) in.push_back({g.hair_label[h], g.graph.sigma1(h)});
            if (g.kind[h] == VertexKind::OutHair) out.push_back({g.hair_label[h], g.graph.sigma1(h)});
        }
        j["in_hairs"] = in;
        j["out_hairs"] = out;
    }
    json items = json::array();
    for (const auto& it : og.ori.items) items.push_back({item_name(it.kind), it.half_edge});
    j["orientation"] = items;
    if (!og.ori.dir_sign.empty()) j["dir_sign"] = og.ori.dir_sign;
    return j;
}

OrientedGraph graph_from_json(const json& j) {
    OrientedGraph og;
    try {
        const int n = j.at("n_half").get<int>();
        auto s0 = j.at("sigma0").get<std::vector<int>>();
        auto s1 = j.at("sigma1").get<std::vector<int>>();
        if (static_cast<int>(s0.size()) != n || static_cast<int>(s1.size()) != n)
            throw RibbonError(ErrorCode::NotPermutation, "n_half disagrees with the permutations");
        og.g.graph = RibbonGraph::build(std::move(s0), std::move(s1));
        if (j.contains("dirs")) {
            og.g.tail.assign(n, 0);
            for (int h : j["dirs"].get<std::vector<int>>()) {
                if (h < 0 || h >= n) throw RibbonError(ErrorCode::NotPermutation, "dirs out of range");
                og.g.tail[h] = 1;
            }
            for (int h = 0; h < n; ++h)
                if (og.g.tail[h] == og.g.tail[og.g.graph.sigma1(h)])
                    throw RibbonError(ErrorCode::NotPermutation, "every edge needs exactly one source");
        }
        if (j.contains("labels")) og.g.boundary_label = j["labels"].get<std::vector<int>>();
        if (j.contains("kinds")) {
            for (int k : j["kinds"].get<std::vector<int>>()) og.g.kind.push_back(static_cast<VertexKind>(k));
            og.g.hair_label = j.at("hair_labels").get<std::vector<int>>();
        }
        for (const auto& it : j.at("orientation")) og.ori.items.push_back({item_from(it.at(0)), it.at(1).get<int>()});
        if (j.contains("dir_sign")) og.ori.dir_sign = j["dir_sign"].get<std::vector<std::uint8_t>>();
    } catch (const json::exception& e) {
        throw RibbonError(ErrorCode::Config, std::string("malformed graph: ") + e.what());
    }
    return og;
}

json to_json(const FamilySpec& s) {
    json j{{"family", family_name(s.family)}, {"d", s.d}, {"g", s.g}, {"m", s.m}};
    if (s.edges) j["edges"] = *s.edges;
    if (s.vertices) j["vertices"] = *s.vertices;
    if (s.family == Family::PCY) {
        j["p"] = s.p;
        j["q"] = s.q;
    }
    if (s.drop_passing) j["drop_passing"] = true;
    return j;
}

FamilySpec spec_from_json(const json& j) {
    FamilySpec s;
    auto f = parse_family(j.at("family").get<std::string>());
    if (!f) throw RibbonError(ErrorCode::Config, "unknown family");
    s.family = *f;
    s.d = j.at("d");
    s.g = j.value("g", 0);
    s.m = j.value("m", 1);
    if (j.contains("edges")) s.edges = j["edges"].get<int>();
    if (j.contains("vertices")) s.vertices = j["vertices"].get<int>();
    s.p = j.value("p", 0);
    s.q = j.value("q", 0);
    s.drop_passing = j.value("drop_passing", false);
    return s;
}

json to_json(const RankReport& r) {
    json rows = json::array();
    for (const auto& d : r.degrees)
        rows.push_back({{"degree", d.degree}, {"dim", d.dim}, {"rank_in", d.rank_in}, {"rank_out", d.rank_out},
                        {"betti", d.betti}});
    return {{"spec", to_json(r.spec)}, {"prime", r.prime}, {"degrees", rows},
            {"euler_dims", r.euler_dims}, {"euler_betti", r.euler_betti}};
}

json to_json(const ComparisonReport& r) {
    json rows = json::array();
    for (const auto& t : r.rows)
        rows.push_back({{"degree", t.degree}, {"edges_rgc", t.edges_rgc}, {"edges_orgc", t.edges_orgc},
                        {"dim_rgc", t.dim_rgc}, {"dim_orgc", t.dim_orgc},
                        {"betti_rgc", t.betti_rgc}, {"betti_orgc", t.betti_orgc}});
    return {{"d", r.d}, {"g", r.g}, {"m", r.m}, {"drop_passing", r.drop_passing}, {"rows", rows}, {"agree", r.agree}};
}

void write_basis(std::ostream& os, const GradedBasis& b) {
    for (const auto& rep : b.reps) os << to_json(*rep).dump() << '\n';
}

GradedBasis read_basis(std::istream& is, const FamilySpec& spec, int degree) {
    GradedBasis b;
    b.spec = spec;
    b.degree = degree;
    const auto tag = family_tag(spec);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw RibbonError(ErrorCode::Cache, std::string("unreadable basis line: ") + e.what());
        }
        auto og = std::make_shared<OrientedGraph>(graph_from_json(j));
        auto cf = canonical_form(*og, tag);
        if (cf.is_zero || cf.sign != 1 || cf.relabel.empty())
            throw RibbonError(ErrorCode::Cache, "stored representative is not canonical");
        for (int h = 0; h < og->g.graph.n_half(); ++h)
            if (cf.relabel[h] != h) throw RibbonError(ErrorCode::Cache, "stored representative is not canonical");
        b.add(std::move(cf.key), std::move(og));
    }
    b.finalize();
    return b;
}

void write_matrix_market(std::ostream& os, const SparseMatrix& m) {
    bool integral = true;
    for (const auto& e : m.entries()) integral = integral && e.value.get_den() == 1;
    os << "%%MatrixMarket matrix coordinate " << (integral ? "integer" : "rational") << " general\n";
    if (!integral) os << "% values are exact fractions p/q\n";
    os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (const auto& e : m.entries()) os << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.get_str() << '\n';
}

SparseMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket matrix coordinate", 0) != 0)
        throw RibbonError(ErrorCode::Config, "not a Matrix Market coordinate file");
    while (std::getline(is, line) && !line.empty() && line[0] == '%') {
    }
    std::istringstream head(line);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(head >> rows >> cols >> nnz)) throw RibbonError(ErrorCode::Config, "bad Matrix Market size line");
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < nnz; ++i) {
        std::size_t r = 0, c = 0;
        std::string v;
        if (!(is >> r >> c >> v) || r == 0 || c == 0 || r > rows || c > cols)
            throw RibbonError(ErrorCode::Config, "bad Matrix Market entry");
        Rational q(v);
        q.canonicalize();
        m.add(r - 1, c - 1, q);
    }
    m.finalize();
    return m;
}

std::string format_table(const RankReport& r) {
    std::ostringstream os;
    os << describe(r.spec) << "  (rank checked mod " << r.prime << ")\n";
    os << std::setw(8) << "degree" << std::setw(10) << "dim" << std::setw(10) << "rank_in" << std::setw(10)
       << "rank_out" << std::setw(8) << "betti" << '\n';
    for (const auto& d : r.degrees)
        os << std::setw(8) << d.degree << std::setw(10) << d.dim << std::setw(10) << d.rank_in << std::setw(10)
           << d.rank_out << std::setw(8) << d.betti << '\n';
    os << "euler: dims " << r.euler_dims << ", betti " << r.euler_betti << '\n';
    return os.str();
}

}  // namespace ribbon
