#pragma once

#include <span>
#include <vector>

namespace ribbon {

// A ribbon graph on half-edges 0..n-1: sigma0 rotates half-edges around their
// vertex, sigma1 pairs them into edges.  Vertices are numbered by their least
// half-edge and each vertex lists its half-edges cyclically from that one.
class RibbonGraph {
public:
    RibbonGraph() = default;

    // Validates both permutations; throws RibbonError.
    static RibbonGraph build(std::vector<int> sigma0, std::vector<int> sigma1);
    // Skips validation.  For internal constructions that are correct by design.
    static RibbonGraph from_trusted(std::vector<int> sigma0, std::vector<int> sigma1);
    // Same as from_trusted but reuses this graph's storage.
    void assign_trusted(std::span<const int> sigma0, std::span<const int> sigma1);

    int n_half() const noexcept { return static_cast<int>(sigma0_.size()); }
    int num_edges() const noexcept { return n_half() / 2; }
    int num_vertices() const noexcept { return static_cast<int>(vertex_offset_.size()) - 1; }

    int sigma0(int h) const { return sigma0_[h]; }
    int sigma0_inv(int h) const { return sigma0_inv_[h]; }
    int sigma1(int h) const { return sigma1_[h]; }
    // Boundary successor: sigma0^-1 after sigma1.
    int sigma_inf(int h) const { return sigma0_inv_[sigma1_[h]]; }

    std::span<const int> sigma0() const { return sigma0_; }
    std::span<const int> sigma1() const { return sigma1_; }

    int vertex_of(int h) const { return vertex_of_[h]; }
    std::span<const int> vertex_half_edges(int v) const {
        return {vertex_he_.data() + vertex_offset_[v],
                static_cast<std::size_t>(vertex_offset_[v + 1] - vertex_offset_[v])};
    }
    int valency(int v) const { return vertex_offset_[v + 1] - vertex_offset_[v]; }

    bool is_connected() const;

    friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
        return a.sigma0_ == b.sigma0_ && a.sigma1_ == b.sigma1_;
    }

private:
    void index();

    std::vector<int> sigma0_, sigma1_, sigma0_inv_;
    std::vector<int> vertex_of_, vertex_he_, vertex_offset_{0};
};

// Boundary cycles (orbits of sigma_inf), ordered by least half-edge, each
// starting at its least half-edge.
std::vector<std::vector<int>> boundaries(const RibbonGraph& g);

// boundary index of every half-edge, consistent with boundaries()
std::vector<int> boundary_index(const RibbonGraph& g);

// Throws Disconnected for disconnected input.
int genus(const RibbonGraph& g);

// A corner is named by the half-edge u it follows: the gap between u and
// sigma0(u).  The corner after u lies on the boundary cycle through u.
struct Corners {
    std::vector<std::vector<int>> by_vertex;
    std::vector<std::vector<int>> by_boundary;
};
Corners corners(const RibbonGraph& g);

}  // namespace ribbon
