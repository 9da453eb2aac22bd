#include "ribbon/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ribbon/errors.hpp"

namespace ribbon {

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    entries_.push_back({r, c, v});
    finalized_ = false;
}

void SparseMatrix::finalize() {
    if (finalized_) return;
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    std::vector<Entry> merged;
    for (auto& e : entries_) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value += e.value;
        } else {
            if (!merged.empty() && merged.back().value == 0) merged.pop_back();
            merged.push_back(std::move(e));
        }
    }
    if (!merged.empty() && merged.back().value == 0) merged.pop_back();
    entries_ = std::move(merged);
    finalized_ = true;
}

bool SparseMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e.value != 0) return false;
    return true;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw RibbonError(ErrorCode::TypeMismatch, "matrix shapes do not compose");
    // rows of b indexed by row
    std::vector<std::vector<const SparseMatrix::Entry*>> arow(a.cols());
    for (const auto& e : a.entries()) arow[e.col].push_back(&e);
    SparseMatrix out(a.rows(), b.cols());
    for (const auto& eb : b.entries())
        for (const auto* ea : arow[eb.row]) out.add(ea->row, eb.col, ea->value * eb.value);
    out.finalize();
    return out;
}

namespace {

// Rows with integer entries: each row scaled by the lcm of its denominators.
std::vector<std::vector<std::pair<std::size_t, mpz_class>>> integer_rows(const SparseMatrix& m) {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(m.rows());
    for (const auto& e : m.entries())
        if (e.value != 0) rows[e.row].emplace_back(e.col, e.value);
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> out(m.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        mpz_class l = 1;
        for (auto& [c, v] : rows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (auto& [c, v] : rows[r]) {
            mpz_class x = v.get_num() * (l / v.get_den());
            out[r].emplace_back(c, x);
        }
        std::sort(out[r].begin(), out[r].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
}

// Column permutation putting sparse columns first.
std::vector<std::size_t> column_order(const SparseMatrix& m) {
    std::vector<std::size_t> count(m.cols(), 0);
    for (const auto& e : m.entries()) ++count[e.col];
    std::vector<std::size_t> cols(m.cols());
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) { return count[a] < count[b]; });
    std::vector<std::size_t> pos(m.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = i;
    return pos;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

template <class Row>
std::vector<std::size_t> by_length(const std::vector<Row>& rows) {
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
    return order;
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    using Row = std::vector<std::pair<std::size_t, std::uint32_t>>;
    const auto pos = column_order(m);
    std::vector<Row> rows(m.rows());
    for (const auto& e : m.entries()) {
        mpz_class num = e.value.get_num() % p, den = e.value.get_den() % p;
        if (num < 0) num += p;
        if (den == 0) throw RibbonError(ErrorCode::RankMismatch, "denominator divisible by the prime");
        std::uint64_t v = num.get_ui() * static_cast<std::uint64_t>(mod_inverse(den.get_ui(), p)) % p;
        if (v) rows[e.row].emplace_back(pos[e.col], static_cast<std::uint32_t>(v));
    }
    for (auto& r : rows) std::sort(r.begin(), r.end());

    std::map<std::size_t, Row> pivots;  // leading column -> row with leading 1
    Row scratch;
    for (std::size_t idx : by_length(rows)) {
        Row r = std::move(rows[idx]);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) break;
            const std::uint64_t f = p - r.front().second;
            const Row& pr = it->second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < pr.size()) {
                if (j == pr.size() || (i < r.size() && r[i].first < pr[j].first)) {
                    scratch.push_back(r[i++]);
                } else if (i == r.size() || pr[j].first < r[i].first) {
                    scratch.emplace_back(pr[j].first, static_cast<std::uint32_t>(f * pr[j].second % p));
                    ++j;
                } else {
                    std::uint32_t v = static_cast<std::uint32_t>((r[i].second + f * pr[j].second) % p);
                    if (v) scratch.emplace_back(r[i].first, v);
                    ++i;
                    ++j;
                }
            }
            std::swap(r, scratch);
        }
        if (r.empty()) continue;
        const std::uint64_t inv = mod_inverse(r.front().second, p);
        for (auto& [c, v] : r) v = static_cast<std::uint32_t>(v * inv % p);
        pivots.emplace(r.front().first, std::move(r));
    }
    return pivots.size();
}

std::size_t rank_sparse_integer(const SparseMatrix& m) {
    using Row = std::vector<std::pair<std::size_t, mpz_class>>;
    const auto pos = column_order(m);
    auto rows = integer_rows(m);
    for (auto& r : rows) {
        for (auto& e : r) e.first = pos[e.first];
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::map<std::size_t, Row> pivots;
    Row scratch;
    mpz_class g, a, b;
    for (std::size_t idx : by_length(rows)) {
        Row r = std::move(rows[idx]);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) break;
            const Row& pr = it->second;
            // r := (p0/g) r - (r0/g) pr
            mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), pr.front().second.get_mpz_t());
            a = pr.front().second / g;
            b = r.front().second / g;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < pr.size()) {
                if (j == pr.size() || (i < r.size() && r[i].first < pr[j].first)) {
                    scratch.emplace_back(r[i].first, a * r[i].second);
                    ++i;
                } else if (i == r.size() || pr[j].first < r[i].first) {
                    scratch.emplace_back(pr[j].first, -b * pr[j].second);
                    ++j;
                } else {
                    mpz_class v = a * r[i].second - b * pr[j].second;
                    if (v != 0) scratch.emplace_back(r[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            std::swap(r, scratch);
            if (!r.empty()) {
                g = 0;
                for (auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                if (g > 1)
                    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            }
        }
        if (r.empty()) continue;
        pivots.emplace(r.front().first, std::move(r));
    }
    return pivots.size();
}

std::size_t rank_dense_bareiss(const SparseMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    auto irows = integer_rows(m);
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc, 0));
    for (std::size_t r = 0; r < nr; ++r)
        for (auto& [c, v] : irows[r]) a[r][c] = v;
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < nr; ++r) {
            for (std::size_t c = col + 1; c < nc; ++c) {
                a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t rank_exact(const SparseMatrix& m) {
    if (m.cols() < 500 && m.rows() * m.cols() <= 100000) return rank_dense_bareiss(m);
    return rank_sparse_integer(m);
}

std::size_t checked_rank(const SparseMatrix& m, std::uint32_t p) {
    const std::size_t q = rank_exact(m);
    const std::size_t r = rank_mod_p(m, p);
    if (q != r)
        throw RibbonError(ErrorCode::RankMismatch, "rank over Q is " + std::to_string(q) + " but rank mod " +
                                                       std::to_string(p) + " is " + std::to_string(r));
    return q;
}

}  // namespace ribbon
