#include "ribbon/cohomology.hpp"

#include <thread>

#include "ribbon/differential.hpp"
#include "ribbon/errors.hpp"

namespace ribbon {

SparseMatrix assemble(const GradedBasis& src, const GradedBasis& dst, const FamilySpec& spec, int workers) {
    SparseMatrix out(dst.size(), src.size());
    workers = std::max(1, workers);
    std::vector<SparseMatrix> parts(workers, SparseMatrix(dst.size(), src.size()));
    std::vector<std::string> errors(workers);
    auto run = [&](int w) {
        try {
            for (std::size_t j = w; j < src.size(); j += workers) {
                const ChainVector dv = differential(*src.reps[j], spec);
                for (const auto& [key, term] : dv.terms()) {
                    auto i = dst.find(key);
                    if (!i) throw RibbonError(ErrorCode::NotAGenerator, "differential leaves the enumerated basis");
                    parts[w].add(*i, j, term.coeff);
                }
            }
        } catch (const std::exception& e) {
            errors[w] = e.what();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (!e.empty()) throw RibbonError(ErrorCode::NotAGenerator, e);
    for (auto& p : parts)
        for (const auto& e : p.entries()) out.add(e.row, e.col, e.value);
    out.finalize();
    return out;
}

SparseMatrix assemble(const FamilySpec& spec, int degree, int workers) {
    return assemble(*basis(spec, degree), *basis(spec, degree + 1), spec, workers);
}

std::pair<int, int> edge_window(const FamilySpec& spec, int max_edges) {
    const int emin = std::max(1, spec.euler() + 1);
    return {degree_for_edges(spec, emin), degree_for_edges(spec, max_edges)};
}

RankReport cohomology(const FamilySpec& spec, int lo, int hi, std::uint32_t prime, int workers) {
    RankReport rep;
    rep.spec = spec;
    rep.prime = prime;
    if (hi < lo) return rep;
    std::vector<std::size_t> rank(hi - lo + 2, 0);  // rank[i] = rank of D_{lo-1+i}
    for (int k = lo - 1; k <= hi; ++k) {
        auto src = basis(spec, k);
        auto dst = basis(spec, k + 1);
        if (src->size() == 0 || dst->size() == 0) continue;
        rank[k - lo + 1] = checked_rank(assemble(*src, *dst, spec, workers), prime);
    }
    for (int k = lo; k <= hi; ++k) {
        DegreeRank dr;
        dr.degree = k;
        dr.dim = basis(spec, k)->size();
        dr.rank_in = rank[k - lo];
        dr.rank_out = rank[k - lo + 1];
        dr.betti = static_cast<long long>(dr.dim) - static_cast<long long>(dr.rank_in + dr.rank_out);
        if (dr.betti < 0) throw RibbonError(ErrorCode::RankMismatch, "negative Betti number: differential does not square to zero");
        const long long s = (k % 2 == 0) ? 1 : -1;
        rep.euler_dims += s * static_cast<long long>(dr.dim);
        rep.euler_betti += s * dr.betti;
        rep.degrees.push_back(dr);
    }
    const long long slo = (lo % 2 == 0) ? 1 : -1, shi = (hi % 2 == 0) ? 1 : -1;
    rep.euler_dims -= slo * static_cast<long long>(rank[0]) + shi * static_cast<long long>(rank.back());
    if (rep.euler_dims != rep.euler_betti)
        throw RibbonError(ErrorCode::RankMismatch, "Euler characteristic check failed");
    return rep;
}

ComparisonReport compare_rgc_orgc(int d, int g, int m, int max_edges, bool drop_passing, std::uint32_t prime,
                               int workers) {
    FamilySpec r;
    r.family = Family::RGC;
    r.d = d;
    r.g = g;
    r.m = m;
    FamilySpec o = r;
    o.family = Family::ORGC;
    o.d = d + 1;
    o.drop_passing = drop_passing;
    auto [lo, hi] = edge_window(r, max_edges);
    auto hr = cohomology(r, lo, hi, prime, workers);
    auto ho = cohomology(o, lo, hi, prime, workers);
    ComparisonReport rep;
    rep.d = d;
    rep.g = g;
    rep.m = m;
    rep.drop_passing = drop_passing;
    const int c = r.euler();
    for (std::size_t i = 0; i < hr.degrees.size(); ++i) {
        ComparisonRow row;
        row.degree = hr.degrees[i].degree;
        row.edges_rgc = row.degree + d * (c + 1);
        row.edges_orgc = row.degree + (d + 1) * (c + 1);
        row.dim_rgc = hr.degrees[i].dim;
        row.dim_orgc = ho.degrees[i].dim;
        row.betti_rgc = hr.degrees[i].betti;
        row.betti_orgc = ho.degrees[i].betti;
        if (row.betti_rgc != row.betti_orgc) rep.agree = false;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace ribbon
