#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "ribbon/chain_vector.hpp"
#include "ribbon/family.hpp"

namespace ribbon {

// Substitute the unique boundary of guest into vertex v of host: every
// cyclic-order-compatible way of distributing the half-edges of v over the
// corners of that boundary.  spec must be RGC1 or ORGC1 (sets d and signs).
ChainVector insert_boundary(const OrientedGraph& host, int v, const OrientedGraph& guest, const FamilySpec& spec);

// Sum over all vertices of host.
ChainVector pre_lie(const OrientedGraph& x, const OrientedGraph& y, const FamilySpec& spec);
ChainVector pre_lie(const ChainVector& x, const ChainVector& y, const FamilySpec& spec);

// [x,y] = x o y - (-1)^{|x||y|} y o x; inputs must be homogeneous.
ChainVector bracket(const ChainVector& x, const ChainVector& y, const FamilySpec& spec);

// Coefficients by canonical key, without representatives.  Cheaper than a
// ChainVector when only vanishing is in question.
using CoeffMap = std::unordered_map<std::string, Rational>;
void bracket_into(CoeffMap& out, const ChainVector& x, const ChainVector& y, const Rational& scale,
                  const FamilySpec& spec);
bool is_zero(const CoeffMap& m);

// Number of raw insertion terms a bracket expands into, before any
// cancellation; saturates at UINT64_MAX.
std::uint64_t bracket_term_count(const ChainVector& x, const ChainVector& y);

// Single edge between two univalent vertices, degree 1.
OrientedGraph unit_edge(const FamilySpec& spec);

// [tau, -]
ChainVector rgc1_delta(const ChainVector& x, const FamilySpec& spec);

ChainVector as_chain(const OrientedGraph& g, const FamilySpec& spec);
// Degree of a homogeneous chain; throws TypeMismatch otherwise.  0 for the zero chain.
int chain_degree(const ChainVector& x, const FamilySpec& spec);

}  // namespace ribbon
