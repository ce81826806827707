#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fqid/algebra.hpp"

namespace fqid {

/// Full matrix algebra M_n(F_q); basis e11, e12, ..., enn row-major.
Algebra matrix_algebra(int n, const FieldPtr& field);
/// Upper-triangular n x n matrices; basis e_ij, i <= j, row-major.
Algebra upper_triangular(int n, const FieldPtr& field);
/// Strictly upper-triangular matrices under the commutator; basis e_ij,
/// i < j, row-major. Bracket algebra.
Algebra strictly_upper_triangular_lie(int n, const FieldPtr& field);
/// Heisenberg Lie algebra: [b1, b2] = b3.
Algebra heisenberg(const FieldPtr& field);
/// t F_q[t] / (t^m); basis t, t^2, ..., t^{m-1}.
Algebra truncated(const FieldPtr& field, int m);
/// F_q as a one-dimensional algebra over itself, b1 * b1 = b1.
Algebra field_as_algebra(const FieldPtr& field);

/// Builds from text such as "matrix(2,2)", "truncated(2,3)", "heisenberg(3)",
/// "field(4)". The last or only parameter of every builder is the field
/// order q, except truncated(q, m). Throws UnknownBuilder.
Algebra builtin_algebra(std::string_view spec);

/// Builder names accepted by builtin_algebra.
std::vector<std::string> builtin_names();

/// The fixed set of small algebras used by the test battery.
std::vector<std::string> library_specs();

}  // namespace fqid
