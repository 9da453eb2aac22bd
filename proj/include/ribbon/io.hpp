#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ribbon/cohomology.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/sparse_matrix.hpp"

namespace ribbon {

// {"n_half", "sigma0", "sigma1", "dirs", "labels", ...}.  dirs lists the
// source half-edge of each directed edge.  Optional keys are omitted when
// the decoration is absent.  PCY graphs also carry "in_hairs"/"out_hairs"
// as [label, internal half-edge] pairs.
nlohmann::json to_json(const OrientedGraph& g);
// Validates the permutations; throws RibbonError.
OrientedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankReport& r);
nlohmann::json to_json(const ComparisonReport& r);

// One representative per line, in basis order.
void write_basis(std::ostream& os, const GradedBasis& b);
// Rebuilds keys by canonicalizing each line.
GradedBasis read_basis(std::istream& is, const FamilySpec& spec, int degree);

// Matrix Market coordinate format.  Non-integer values are written as p/q,
// which standard readers reject; our reader accepts them.
void write_matrix_market(std::ostream& os, const SparseMatrix& m);
SparseMatrix read_matrix_market(std::istream& is);

// Aligned text table of a rank report.
std::string format_table(const RankReport& r);

}  // namespace ribbon
