#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "ribbon/cache.hpp"
#include "ribbon/canonical.hpp"
#include "ribbon/cohomology.hpp"
#include "ribbon/differential.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/io.hpp"
#include "ribbon/liealg.hpp"
#include "ribbon/pcy.hpp"
#include "ribbon/quiver.hpp"
#include "ribbon/verify.hpp"

using namespace ribbon;

namespace {

FamilySpec spec_of(Family f, int d, int g, int m = 1) {
    FamilySpec s;
    s.family = f;
    s.d = d;
    s.g = g;
    s.m = m;
    return s;
}

std::vector<std::vector<mpq_class>> dense(const SparseMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (const auto& e : m.entries()) a[e.row][e.col] = e.value;
    return a;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool fractions) {
    SparseMatrix m(rows, cols);
    std::uniform_int_distribution<int> val(-3, 3), den(1, 4), coin(0, 2);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng) == 0) {
                mpq_class q(val(rng), fractions ? den(rng) : 1);
                q.canonicalize();
                m.add(r, c, q);
            }
    m.finalize();
    return m;
}

// Ways to hang k cyclically ordered items on n cyclically ordered slots,
// each slot holding a linear run, so that reading the slots in order gives
// a rotation of 0..k-1.
std::uint64_t brute_cyclic_maps(int n, int k) {
    std::uint64_t count = 0;
    std::vector<int> slot(k, 0), order(k);
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<int> seq;
            for (int s = 0; s < n; ++s)
                for (int i : order)
                    if (slot[i] == s) seq.push_back(i);
            if (seq != order) continue;  // each filling once
            for (int r = 0; r < k; ++r) {
                bool ok = true;
                for (int i = 0; i < k; ++i) ok = ok && seq[(i + r) % k] == i;
                if (ok) {
                    ++count;
                    break;
                }
            }
        } while (std::next_permutation(order.begin(), order.end()));
        int i = 0;
        while (i < k && ++slot[i] == n) slot[i++] = 0;
        if (i == k) break;
    }
    return count;
}

}  // namespace

TEST(SparseMatrix, RanksAgreeWithGaussianElimination) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        auto m = random_matrix(rng, rows, cols, t % 2);
        const auto expect = oracle::rank_q(dense(m));
        EXPECT_EQ(rank_exact(m), expect);
        EXPECT_EQ(rank_dense_bareiss(m), expect);
        EXPECT_EQ(rank_sparse_integer(m), expect);
        EXPECT_LE(rank_mod_p(m, kDefaultPrime), expect);
    }
}

TEST(SparseMatrix, MultiplyMatchesDenseProduct) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto a = random_matrix(rng, 4, 5, true), b = random_matrix(rng, 5, 3, true);
        auto c = dense(multiply(a, b));
        auto da = dense(a), db = dense(b);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                mpq_class s = 0;
                for (std::size_t k = 0; k < 5; ++k) s += da[i][k] * db[k][j];
                EXPECT_EQ(c[i][j], s);
            }
    }
}

TEST(SparseMatrix, ModPMismatchIsAnError) {
    SparseMatrix m(1, 1);
    m.add(0, 0, 7);
    m.finalize();
    EXPECT_EQ(checked_rank(m, 3), 1u);
    try {
        checked_rank(m, 7);
        FAIL() << "expected RankMismatch";
    } catch (const RibbonError& e) {
        EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
    }
}

TEST(Differential, SquaresToZeroOnSmallPieces) {
    std::vector<FamilySpec> specs = {spec_of(Family::RGC1, 2, 1), spec_of(Family::RGC1, 3, 1),
                                     spec_of(Family::ORGC1, 2, 1), spec_of(Family::ORGC1, 3, 1),
                                     spec_of(Family::RGC, 2, 0, 3), spec_of(Family::ORGC, 3, 0, 3)};
    for (const auto& s : specs) {
        auto [lo, hi] = edge_window(s, 6);
        for (int k = lo; k + 1 < hi; ++k) {
            auto p = multiply(assemble(s, k + 1), assemble(s, k));
            EXPECT_TRUE(p.is_zero()) << describe(s) << " degree " << k;
        }
    }
}

TEST(Differential, QuiverTermsAreAcyclic) {
    auto s = spec_of(Family::ORGC1, 3, 1);
    auto [lo, hi] = edge_window(s, 5);
    for (int k = lo; k < hi; ++k)
        for (const auto& rep : basis(s, k)->reps) {
            const auto dv = differential(*rep, s);
            for (const auto& [key, t] : dv.terms()) EXPECT_TRUE(is_acyclic(t.rep->g.graph, t.rep->g.tail));
        }
}

TEST(Differential, BasisOrderIndependent) {
    auto s = spec_of(Family::RGC, 2, 1, 2);
    const int k = degree_for_edges(s, 4);
    auto src = *basis(s, k), dst = *basis(s, k + 1);
    std::mt19937_64 rng(3);
    auto shuffled = [&](const GradedBasis& b, std::vector<std::size_t>& perm) {
        perm.resize(b.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        GradedBasis out;
        out.spec = b.spec;
        out.degree = b.degree;
        for (auto i : perm) out.add(b.keys[i], b.reps[i]);
        return out;
    };
    std::vector<std::size_t> ps, pd;
    auto s2 = shuffled(src, ps), d2 = shuffled(dst, pd);
    auto a = dense(assemble(src, dst, s)), b = dense(assemble(s2, d2, s));
    for (std::size_t i = 0; i < pd.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) EXPECT_EQ(b[i][j], a[pd[i]][ps[j]]);
    EXPECT_EQ(oracle::rank_q(a), oracle::rank_q(b));
}

TEST(Cohomology, PassingFreeQuotientKeepsBetti) {
    for (auto [g, m] : {std::pair{1, 1}, std::pair{0, 3}}) {
        auto full = compare_rgc_orgc(2, g, m, 6 * g - 6 + 3 * m, false);
        auto cut = compare_rgc_orgc(2, g, m, 6 * g - 6 + 3 * m, true);
        ASSERT_EQ(full.rows.size(), cut.rows.size());
        EXPECT_TRUE(full.agree);
        EXPECT_TRUE(cut.agree);
        for (std::size_t i = 0; i < full.rows.size(); ++i) {
            EXPECT_EQ(full.rows[i].betti_orgc, cut.rows[i].betti_orgc);
            EXPECT_GE(full.rows[i].dim_orgc, cut.rows[i].dim_orgc);
        }
    }
}

TEST(Cohomology, EulerCharacteristicOfDimsMatchesBetti) {
    auto s = spec_of(Family::RGC, 2, 0, 3);
    auto [lo, hi] = edge_window(s, 3);
    auto r = cohomology(s, lo, hi);
    EXPECT_EQ(r.euler_dims, r.euler_betti);
}

TEST(LieAlgebra, TermCountFormulaMatchesBruteForce) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 4; ++k) {
            std::uint64_t c = 1;
            for (int i = 1; i <= k - 1; ++i) c = c * (n + i) / i;
            EXPECT_EQ(n * c, brute_cyclic_maps(n, k)) << n << " corners, valency " << k;
        }
    auto s = spec_of(Family::RGC1, 2, 1);
    const auto& gens = basis(s, degree_for_edges(s, 3))->reps;
    ASSERT_EQ(gens.size(), 1u);
    auto x = as_chain(*gens[0], s);
    // one generator: two trivalent vertices, six corners on its boundary
    EXPECT_EQ(bracket_term_count(x, x), 2u * 2u * (6u * 28u));
}

TEST(LieAlgebra, DeltaIsScaledSplitting) {
    for (auto s : {spec_of(Family::RGC1, 2, 1), spec_of(Family::ORGC1, 3, 1)}) {
        auto [lo, hi] = edge_window(s, 5);
        for (int k = lo; k <= hi; ++k) {
            std::optional<Rational> ratio;
            for (const auto& rep : basis(s, k)->reps) {
                auto x = as_chain(*rep, s);
                auto a = rgc1_delta(x, s);
                auto b = differential(x, s);
                ASSERT_EQ(a.is_zero(), b.is_zero());
                for (const auto& [key, t] : b.terms()) {
                    Rational q = a.coefficient(key) / t.coeff;
                    if (!ratio) ratio = q;
                    EXPECT_EQ(q, *ratio) << describe(s) << " degree " << k;
                }
                EXPECT_EQ(a.size(), b.size());
                EXPECT_TRUE(rgc1_delta(a, s).is_zero());
            }
        }
    }
}

TEST(LieAlgebra, Antisymmetry) {
    auto s = spec_of(Family::RGC1, 2, 1);
    std::vector<ChainVector> xs;
    for (int e = 3; e <= 4; ++e)
        for (const auto& rep : basis(s, degree_for_edges(s, e))->reps) xs.push_back(as_chain(*rep, s));
    xs.push_back(as_chain(unit_edge(s), s));
    for (const auto& x : xs)
        for (const auto& y : xs) {
            const int dx = chain_degree(x, s), dy = chain_degree(y, s);
            auto lhs = bracket(x, y, s);
            auto rhs = bracket(y, x, s).scaled((dx * dy) % 2 ? 1 : -1);
            EXPECT_TRUE(lhs == rhs);
        }
}

TEST(Pcy, CorollaAndCompose) {
    const int d = 2;
    auto a = pcy_corolla(d, {{VertexKind::InHair, 1}, {VertexKind::OutHair, 1}, {VertexKind::OutHair, 2}});
    auto b = pcy_corolla(d, {{VertexKind::InHair, 1}, {VertexKind::InHair, 2}, {VertexKind::OutHair, 1}});
    EXPECT_TRUE(is_pcy_generator(a));
    EXPECT_TRUE(is_pcy_generator(b));
    auto two = pcy_corolla(d, {{VertexKind::InHair, 1}, {VertexKind::OutHair, 1}});
    EXPECT_FALSE(is_pcy_generator(two));
    const auto spec = pcy_spec(d);
    auto c = compose(a, {{1, 1}}, b, d);
    EXPECT_TRUE(is_pcy_generator(c.graph));
    EXPECT_EQ(degree_of(spec, c.graph.g), degree_of(spec, a.g) + degree_of(spec, b.g));
    EXPECT_TRUE(pcy_delta(a, d).is_zero());
}

TEST(Pcy, SmallSuitePasses) {
    PcyConfig cfg;
    cfg.max_hairs = 4;
    cfg.samples = 30;
    auto j = check_pcy(cfg);
    EXPECT_TRUE(j.at("passed").get<bool>()) << j.dump();
}

TEST(Io, GraphJsonRoundTrip) {
    for (auto s : {spec_of(Family::ORGC, 3, 0, 3), spec_of(Family::RGC1, 3, 1)}) {
        const int k = degree_for_edges(s, 4);
        auto b = basis(s, k);
        for (std::size_t i = 0; i < b->size(); ++i) {
            auto back = graph_from_json(nlohmann::json::parse(to_json(*b->reps[i]).dump()));
            auto cf = canonical_form(back, family_tag(s));
            EXPECT_EQ(cf.key, b->keys[i]);
            EXPECT_EQ(cf.sign, 1);
        }
        std::stringstream ss;
        write_basis(ss, *b);
        auto again = read_basis(ss, s, k);
        EXPECT_EQ(again.keys, b->keys);
        EXPECT_EQ(spec_from_json(to_json(s)).d, s.d);
    }
}

TEST(Io, RejectsNonCanonicalCacheLine) {
    auto s = spec_of(Family::RGC1, 2, 1);
    auto b = basis(s, degree_for_edges(s, 3));
    std::vector<int> p(b->reps[0]->g.graph.n_half());
    std::iota(p.rbegin(), p.rend(), 0);
    std::stringstream ss;
    ss << to_json(relabel(*b->reps[0], p)).dump() << '\n';
    EXPECT_THROW(read_basis(ss, s, b->degree), RibbonError);
    std::stringstream bad("{\"n_half\": 2, \"sigma0\": [0, 0], \"sigma1\": [1, 0], \"orientation\": []}\n");
    EXPECT_THROW(read_basis(bad, s, b->degree), RibbonError);
}

TEST(Io, MatrixMarketRoundTrip) {
    std::mt19937_64 rng(9);
    for (bool frac : {false, true}) {
        auto m = random_matrix(rng, 6, 7, frac);
        std::stringstream ss;
        write_matrix_market(ss, m);
        const std::string head = ss.str().substr(0, ss.str().find('\n'));
        EXPECT_EQ(head, frac ? "%%MatrixMarket matrix coordinate rational general"
                             : "%%MatrixMarket matrix coordinate integer general");
        auto back = read_matrix_market(ss);
        EXPECT_EQ(dense(back), dense(m));
    }
}

TEST(Cache, WarmEqualsColdAndStaleFilesRebuild) {
    auto dir = std::filesystem::temp_directory_path() / ("ribbon_cache_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    auto s = spec_of(Family::ORGC, 3, 1, 1);
    const int k = degree_for_edges(s, 4);
    std::vector<std::string> cold;
    {
        DiskCache c(dir);
        set_basis_store(&c);
        clear_memo();
        cold = basis(s, k)->keys;
        EXPECT_EQ(c.misses(), 1u);
        EXPECT_TRUE(std::filesystem::exists(c.file_for(s, k)));
    }
    {
        DiskCache c(dir);
        set_basis_store(&c);
        clear_memo();
        EXPECT_EQ(basis(s, k)->keys, cold);
        EXPECT_EQ(c.hits(), 1u);
        std::ofstream(c.file_for(s, k), std::ios::app) << "{}\n";
    }
    {
        DiskCache c(dir);
        set_basis_store(&c);
        clear_memo();
        EXPECT_EQ(basis(s, k)->keys, cold);
        EXPECT_EQ(c.misses(), 1u);
    }
    set_basis_store(nullptr);
    clear_memo();
    std::filesystem::remove_all(dir);
}
