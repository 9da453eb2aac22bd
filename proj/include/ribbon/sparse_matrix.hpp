#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/chain_vector.hpp"

namespace ribbon {

class SparseMatrix {
public:
    struct Entry {
        std::size_t row, col;
        Rational value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    void add(std::size_t r, std::size_t c, const Rational& v);
    // Sort by (column, row), merge duplicates, drop zeros.  Idempotent.
    void finalize();

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Entry> entries_;
    bool finalized_ = true;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Rank over Q: fraction-free Bareiss below 500 columns, sparse integer
// elimination above.
std::size_t rank_exact(const SparseMatrix& m);
std::size_t rank_dense_bareiss(const SparseMatrix& m);
std::size_t rank_sparse_integer(const SparseMatrix& m);

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

// Exact rank, cross-checked against rank mod p; throws RankMismatch when
// they differ.
std::size_t checked_rank(const SparseMatrix& m, std::uint32_t p);

}  // namespace ribbon
