#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commdet/constraints.hpp"
#include "commdet/graph.hpp"

namespace commdet {

// Objective matrices fed to the detectors. A is the plain adjacency matrix;
// B1 overwrites it with the raw constraints; B2 with the enhanced ones;
// the _ML/_CL variants incorporate one constraint type only. There is no
// B2_CL: cannot-link alone admits no inference, so it would equal B1_CL.
enum class Variant { A, B1, B2, B1_ML, B1_CL, B2_ML };

std::string to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view name);
const std::vector<Variant>& all_variants();

// out[i][j] = alpha on ML pairs, 0 on CL pairs, a[i][j] elsewhere.
Matrix revise(const Matrix& a, const ConstraintSet& s, double alpha);

// The constraint set a variant actually incorporates (filtered and, for the
// B2 family, enhanced).
ConstraintSet variant_constraints(const ConstraintSet& s, Variant v);

Matrix build_variant(const Matrix& a, const ConstraintSet& s, Variant v, double alpha);

// Constraint counts (before, after enhancement) backing a variant; equal for
// the non-enhanced ones.
std::pair<long, long> variant_constraint_counts(const ConstraintSet& s, Variant v);

// Debug dump: dense rows, tab-separated.
void dump_matrix_tsv(const Matrix& m, std::ostream& out);
Matrix load_matrix_tsv(std::istream& in);

}  // namespace commdet
