#pragma once

#include <cstdint>
#include <vector>

#include "ribbon/enumerate.hpp"
#include "ribbon/sparse_matrix.hpp"

namespace ribbon {

constexpr std::uint32_t kDefaultPrime = 32003;

// Matrix of the differential: rows index dst, columns index src.  Throws
// NotAGenerator if a term falls outside dst.
SparseMatrix assemble(const GradedBasis& src, const GradedBasis& dst, const FamilySpec& spec, int workers = 1);
SparseMatrix assemble(const FamilySpec& spec, int degree, int workers = 1);

struct DegreeRank {
    int degree = 0;
    std::size_t dim = 0;
    std::size_t rank_in = 0;   // rank of the differential arriving here
    std::size_t rank_out = 0;  // rank of the differential leaving
    long long betti = 0;
};

struct RankReport {
    FamilySpec spec;
    std::uint32_t prime = kDefaultPrime;
    std::vector<DegreeRank> degrees;
    long long euler_dims = 0;   // alternating sum of dims, corrected for the window ends
    long long euler_betti = 0;  // alternating sum of Betti numbers
};

// Cohomology in degrees lo..hi; bases one step beyond each end are
// enumerated so every reported Betti number is final.
RankReport cohomology(const FamilySpec& spec, int lo, int hi, std::uint32_t prime = kDefaultPrime, int workers = 1);

// Degree window covering edge counts up to max_edges (not MIXED/PCY).
std::pair<int, int> edge_window(const FamilySpec& spec, int max_edges);

struct ComparisonRow {
    int degree = 0;
    int edges_rgc = 0, edges_orgc = 0;
    std::size_t dim_rgc = 0, dim_orgc = 0;
    long long betti_rgc = 0, betti_orgc = 0;
};

struct ComparisonReport {
    int d = 0, g = 0, m = 0;
    bool drop_passing = false;
    std::vector<ComparisonRow> rows;
    bool agree = true;
};

// Betti numbers of RGC_d^{(g,m)} and ORGC_{d+1}^{(g,m)} degree by degree,
// over RGC edge counts up to max_edges.
ComparisonReport compare_rgc_orgc(int d, int g, int m, int max_edges, bool drop_passing = false,
                               std::uint32_t prime = kDefaultPrime, int workers = 1);

}  // namespace ribbon
