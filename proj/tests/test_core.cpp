#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "ribbon/canonical.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/family.hpp"
#include "ribbon/quiver.hpp"

using namespace ribbon;

namespace {

RibbonGraph make(const oracle::Perm& s0, const oracle::Perm& s1) { return RibbonGraph::build(s0, s1); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const RibbonError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no RibbonError thrown";
    return ErrorCode::Config;
}

}  // namespace

TEST(RibbonGraph, TwoTrivalentVerticesThreeEdges) {
    auto one = make({1, 2, 0, 4, 5, 3}, {3, 4, 5, 0, 1, 2});
    EXPECT_EQ(boundaries(one).size(), 1u);
    EXPECT_EQ(genus(one), 1);
    auto three = make({1, 2, 0, 5, 3, 4}, {3, 4, 5, 0, 1, 2});
    EXPECT_EQ(boundaries(three).size(), 3u);
    EXPECT_EQ(genus(three), 0);
}

TEST(RibbonGraph, BoundariesStartAtLeastHalfEdge) {
    auto g = make({1, 2, 3, 0}, {2, 3, 0, 1});
    for (const auto& b : boundaries(g)) EXPECT_EQ(b.front(), *std::min_element(b.begin(), b.end()));
    auto idx = boundary_index(g);
    auto bs = boundaries(g);
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (int h : bs[i]) EXPECT_EQ(idx[h], static_cast<int>(i));
}

TEST(RibbonGraph, CornersPartitionHalfEdges) {
    auto g = make({1, 2, 0, 5, 3, 4}, {3, 4, 5, 0, 1, 2});
    auto c = corners(g);
    std::multiset<int> a, b;
    for (const auto& v : c.by_vertex) a.insert(v.begin(), v.end());
    for (const auto& v : c.by_boundary) b.insert(v.begin(), v.end());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 6u);
}

TEST(RibbonGraph, RejectsMalformedInput) {
    EXPECT_EQ(code_of([] { make({0, 0}, {1, 0}); }), ErrorCode::NotPermutation);
    EXPECT_EQ(code_of([] { make({1, 2, 0}, {1, 2, 0}); }), ErrorCode::NotInvolution);
    EXPECT_EQ(code_of([] { make({1, 0, 2, 3}, {1, 0, 2, 3}); }), ErrorCode::HasFixedPoint);
    EXPECT_EQ(code_of([] { genus(make({1, 0, 3, 2}, {1, 0, 3, 2})); }), ErrorCode::Disconnected);
}

TEST(Family, SupportsOfThreeBoundaries) {
    FamilySpec s;
    s.family = Family::RGC;
    s.d = 2;
    s.g = 0;
    s.m = 3;
    auto sup = enumerate_supports(s, 4);
    std::vector<std::pair<int, int>> ve;
    for (const auto& x : sup) ve.push_back({x.vertices, x.edges});
    EXPECT_EQ(ve, (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}));
    for (const auto& x : sup) EXPECT_EQ(x.degree, x.edges - 2 * 2);
}

TEST(Family, MixedNeedsEdgesAtDegreeOne) {
    FamilySpec s;
    s.family = Family::MIXED;
    s.d = 1;
    s.g = 1;
    EXPECT_EQ(code_of([&] { support_for_degree(s, 0); }), ErrorCode::InfiniteDegreePiece);
}

// underlying_graphs against exhaustive search over all permutation pairs.
TEST(Enumerate, MatchesBruteForceUpToFourEdges) {
    for (int e = 1; e <= 4; ++e)
        for (int g = 0; 2 * g <= e; ++g)
            for (int m = 1; m <= e + 1; ++m) {
                const int v = e - (2 * g - 2 + m);
                if (v < 1) continue;
                auto raws = oracle::raw_graphs(g, m, v);
                auto classes = oracle::brute_classes(raws);
                const auto& ours = underlying_graphs(g, m, v);
                EXPECT_EQ(ours.size(), classes.size()) << "g=" << g << " m=" << m << " V=" << v;
                for (const auto& rg : ours) {
                    EXPECT_EQ(rg.num_vertices(), v);
                    EXPECT_EQ(static_cast<int>(boundaries(rg).size()), m);
                    EXPECT_EQ(genus(rg), g);
                }
                // canonical keys separate exactly the brute-force classes
                std::set<std::string> keys;
                for (const auto& r : raws) {
                    OrientedGraph og;
                    og.g.graph = make(r.s0, r.s1);
                    keys.insert(canonical_form(og, 0).key);
                }
                EXPECT_EQ(keys.size(), classes.size());
            }
}

// One-boundary bases: a class survives iff no automorphism reverses its
// orientation.
TEST(Enumerate, OneBoundaryBasisExcludesOddClasses) {
    for (int d : {2, 3})
        for (int e = 2; e <= 4; ++e)
            for (int g = 1; 2 * g <= e; ++g) {
                const int v = e - (2 * g - 1);
                auto classes = oracle::brute_classes(oracle::raw_graphs(g, 1, v));
                std::size_t expect = 0;
                for (const auto& [s0, s1] : classes) {
                    bool has3 = false;
                    for (int h = 0; h < static_cast<int>(s0.size()); ++h) {
                        int k = 1;
                        for (int x = s0[h]; x != h; x = s0[x]) ++k;
                        has3 = has3 || k >= 3;
                    }
                    if (!has3) continue;
                    bool zero = false;
                    for (const auto& a : oracle::brute_automorphisms(s0, s1))
                        zero = zero || oracle::automorphism_sign(s0, s1, a, d % 2 == 0) < 0;
                    if (!zero) ++expect;
                }
                FamilySpec s;
                s.family = Family::RGC1;
                s.d = d;
                s.g = g;
                auto b = basis(s, degree_for_edges(s, e));
                EXPECT_EQ(b->size(), expect) << "d=" << d << " g=" << g << " E=" << e;
            }
}

TEST(Quiver, AcyclicOrientationsMatchBruteForce) {
    for (int e = 1; e <= 4; ++e)
        for (int g = 0; 2 * g <= e; ++g)
            for (int m = 1; m <= e + 1; ++m) {
                const int v = e - (2 * g - 2 + m);
                if (v < 1) continue;
                for (const auto& rg : underlying_graphs(g, m, v)) {
                    oracle::Perm s0(rg.sigma0().begin(), rg.sigma0().end());
                    oracle::Perm s1(rg.sigma1().begin(), rg.sigma1().end());
                    auto ours = acyclic_orientations(rg);
                    EXPECT_EQ(static_cast<int>(ours.size()), oracle::count_acyclic(s0, s1));
                    for (const auto& t : ours) EXPECT_TRUE(is_acyclic(rg, t));
                }
            }
}

TEST(Quiver, ThetaAndLoop) {
    auto theta = make({1, 2, 0, 5, 3, 4}, {3, 4, 5, 0, 1, 2});
    EXPECT_EQ(acyclic_orientations(theta).size(), 2u);
    auto loop = make({1, 0}, {1, 0});
    EXPECT_TRUE(acyclic_orientations(loop).empty());
}

TEST(Quiver, PassingVertex) {
    // triangle of bivalent vertices; every acyclic orientation has a middle
    // vertex
    DecoratedGraph g;
    g.graph = make({1, 0, 3, 2, 5, 4}, {2, 4, 0, 5, 1, 3});
    // edges {0,2}, {1,4}, {3,5}; vertices {0,1}, {2,3}, {4,5}
    g.tail = directions_from_sources(g.graph, {0, 1, 3});
    ASSERT_TRUE(is_acyclic(g.graph, g.tail));
    EXPECT_TRUE(has_passing_vertex(g));
    EXPECT_EQ(sinks(g), std::vector<int>{2});
}

TEST(Canonical, PlantedOddAutomorphism) {
    // one vertex, two interleaved loops: rotating by one step swaps the
    // edges, which is odd when edges carry the orientation
    FamilySpec s;
    s.family = Family::RGC1;
    s.d = 2;
    s.g = 1;
    OrientedGraph og;
    og.g.graph = make({1, 2, 3, 0}, {2, 3, 0, 1});
    og.ori = reference_orientation(og.g, orientation_rule(s));
    auto cf = canonical_form(og, family_tag(s));
    EXPECT_TRUE(cf.is_zero);
    EXPECT_EQ(cf.automorphisms, 4);
    EXPECT_EQ(basis(s, degree_for_edges(s, 2))->size(), 0u);
}

TEST(Canonical, RelabelingPreservesKeyAndSign) {
    std::mt19937_64 rng(7);
    for (int v = 1; v <= 3; ++v)
        for (const auto& rg : underlying_graphs(1, 1, v)) {
            for (int d : {2, 3}) {
                FamilySpec s;
                s.family = Family::RGC1;
                s.d = d;
                s.g = 1;
                OrientedGraph og;
                og.g.graph = rg;
                og.ori = reference_orientation(og.g, orientation_rule(s));
                auto a = canonical_form(og, family_tag(s));
                std::vector<int> p(rg.n_half());
                std::iota(p.begin(), p.end(), 0);
                for (int t = 0; t < 20; ++t) {
                    std::shuffle(p.begin(), p.end(), rng);
                    auto b = canonical_form(relabel(og, p), family_tag(s));
                    EXPECT_EQ(a.key, b.key);
                    EXPECT_EQ(a.is_zero, b.is_zero);
                    if (!a.is_zero) {
                        EXPECT_EQ(a.sign, b.sign);
                    }
                }
                if (og.ori.items.size() >= 2 && !a.is_zero) {
                    auto sw = og;
                    std::swap(sw.ori.items[0], sw.ori.items[1]);
                    EXPECT_EQ(canonical_form(sw, family_tag(s)).sign, -a.sign);
                }
            }
        }
}
