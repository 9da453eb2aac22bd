#include "ribbon/ribbon_graph.hpp"

#include <string>

#include "ribbon/errors.hpp"

namespace ribbon {

namespace {

void check_permutation(const std::vector<int>& p, const char* name) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x])
            throw RibbonError(ErrorCode::NotPermutation, std::string(name) + " is not a permutation");
        seen[x] = 1;
    }
}

}  // namespace

RibbonGraph RibbonGraph::build(std::vector<int> sigma0, std::vector<int> sigma1) {
    if (sigma0.size() != sigma1.size())
        throw RibbonError(ErrorCode::NotPermutation, "sigma0 and sigma1 differ in length");
    check_permutation(sigma0, "sigma0");
    check_permutation(sigma1, "sigma1");
    for (std::size_t h = 0; h < sigma1.size(); ++h) {
        if (sigma1[h] == static_cast<int>(h))
            throw RibbonError(ErrorCode::HasFixedPoint, "sigma1 fixes half-edge " + std::to_string(h));
        if (sigma1[sigma1[h]] != static_cast<int>(h))
            throw RibbonError(ErrorCode::NotInvolution, "sigma1 is not an involution at " + std::to_string(h));
    }
    return from_trusted(std::move(sigma0), std::move(sigma1));
}

RibbonGraph RibbonGraph::from_trusted(std::vector<int> sigma0, std::vector<int> sigma1) {
    RibbonGraph g;
    g.sigma0_ = std::move(sigma0);
    g.sigma1_ = std::move(sigma1);
    g.index();
    return g;
}

void RibbonGraph::assign_trusted(std::span<const int> sigma0, std::span<const int> sigma1) {
    sigma0_.assign(sigma0.begin(), sigma0.end());
    sigma1_.assign(sigma1.begin(), sigma1.end());
    index();
}

void RibbonGraph::index() {
    const int n = n_half();
    sigma0_inv_.resize(n);
    for (int h = 0; h < n; ++h) sigma0_inv_[sigma0_[h]] = h;
    vertex_of_.assign(n, -1);
    vertex_he_.clear();
    vertex_he_.reserve(n);
    vertex_offset_.assign(1, 0);
    int v = 0;
    for (int h = 0; h < n; ++h) {
        if (vertex_of_[h] >= 0) continue;
        int x = h;
        do {
            vertex_of_[x] = v;
            vertex_he_.push_back(x);
            x = sigma0_[x];
        } while (x != h);
        vertex_offset_.push_back(static_cast<int>(vertex_he_.size()));
        ++v;
    }
}

bool RibbonGraph::is_connected() const {
    const int n = n_half();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int x : {sigma0_[h], sigma1_[h], sigma0_inv_[h]}) {
            if (!seen[x]) {
                seen[x] = 1;
                ++count;
                stack.push_back(x);
            }
        }
    }
    return count == n;
}

std::vector<std::vector<int>> boundaries(const RibbonGraph& g) {
    const int n = g.n_half();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int h = 0; h < n; ++h) {
        if (seen[h]) continue;
        auto& cyc = out.emplace_back();
        int x = h;
        do {
            seen[x] = 1;
            cyc.push_back(x);
            x = g.sigma_inf(x);
        } while (x != h);
    }
    return out;
}

std::vector<int> boundary_index(const RibbonGraph& g) {
    const int n = g.n_half();
    std::vector<int> idx(n, -1);
    int b = 0;
    for (int h = 0; h < n; ++h) {
        if (idx[h] >= 0) continue;
        int x = h;
        do {
            idx[x] = b;
            x = g.sigma_inf(x);
        } while (x != h);
        ++b;
    }
    return idx;
}

int genus(const RibbonGraph& g) {
    if (!g.is_connected()) throw RibbonError(ErrorCode::Disconnected, "genus of a disconnected ribbon graph");
    const int b = static_cast<int>(boundaries(g).size());
    return 1 + (g.num_edges() - g.num_vertices() - b) / 2;
}

Corners corners(const RibbonGraph& g) {
    Corners c;
    c.by_vertex.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto hs = g.vertex_half_edges(v);
        c.by_vertex[v].assign(hs.begin(), hs.end());
    }
    c.by_boundary = boundaries(g);
    return c;
}

}  // namespace ribbon
