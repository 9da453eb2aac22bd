#pragma once

#include <cstdint>

#include <json.hpp>

#include "ribbon/cohomology.hpp"

namespace ribbon {

// Every check returns a JSON object with a boolean "passed" and enough
// detail to locate a failure.  Nothing time-dependent goes in.

// D_{k+1} D_k = 0 over Q for all degree pairs whose bases have at most
// max_edges edges.  spec.family is RGC or ORGC.
nlohmann::json check_dsquared(const FamilySpec& spec, int max_edges, int workers = 1);

// Betti numbers of RGC_d and ORGC_{d+1} over the full RGC window.  The
// ORGC side uses the subcomplex without passing vertices when
// drop_passing is set.
nlohmann::json check_theorem11(int d, int g, int m, bool drop_passing, std::uint32_t prime = kDefaultPrime,
                               int workers = 1);

struct AxiomConfig {
    Family family = Family::RGC1;
    int d = 2;
    int g = 1;
    int exhaustive_max_edges = 4;  // all triples
    int sampled_max_edges = 6;     // random triples
    int samples = 200;
    std::uint64_t seed = 1;
    // Sampled triples whose three outer brackets would expand into more raw
    // insertion terms than this are reported as unchecked, which fails the
    // check.
    std::uint64_t term_limit = 20'000'000;
};
// Antisymmetry, Jacobi, delta = [tau, -] squaring to zero, Leibniz, and
// the comparison of delta with the splitting differential.
nlohmann::json check_axioms(const AxiomConfig& cfg);

// Recoloring complex of two-coloured quivers with one boundary: zero
// cohomology in every degree whose neighbours are fully enumerated.
nlohmann::json check_recolor_acyclic(int d, int g, int max_edges, std::uint32_t prime = kDefaultPrime);

struct PcyConfig {
    int d = 2;
    int max_hairs = 6;  // p + q
    int max_vertices = 2;
    int max_parallel_edges = 3;  // internal edges between two vertices
    int samples = 100;
    std::uint64_t seed = 1;
};
nlohmann::json check_pcy(const PcyConfig& cfg);

// RGC_2^{(0,3)} and rgc_2 genus 1 have one-dimensional cohomology in
// degree 3 - 2d; orgc_3 genus 1 matches rgc_2.
nlohmann::json check_classical(std::uint32_t prime = kDefaultPrime, int workers = 1);

}  // namespace ribbon
