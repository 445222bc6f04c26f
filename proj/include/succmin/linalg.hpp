#pragma once

// Exact linear algebra over Q and Z. No floating point.

#include "succmin/core.hpp"

#include <optional>

namespace succmin::exact {

/// Reduced row echelon form of a rational matrix.
struct Echelon {
  MatrixQ reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

Echelon row_reduce(MatrixQ m);

/// Rank by fraction-free (Bareiss) elimination on the row-wise integer
/// scaling of `m`.
Index rank(const MatrixQ& m);

/// Determinant of a square rational matrix via Bareiss elimination.
Rational determinant(const MatrixQ& m);
Integer determinant(const MatrixZ& m);

/// Inverse; throws InvalidInput when singular.
MatrixQ inverse(const MatrixQ& m);

/// Some solution of A x = b, if one exists.
std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b);

/// Columns form a basis of {x : A x = 0}.
MatrixQ nullspace(const MatrixQ& a);

/// Scales a rational vector to a primitive integer vector with the same
/// direction (zero stays zero).
VectorZ primitive_integer_direction(const VectorQ& v);

/// Common denominator of all entries.
Integer common_denominator(const MatrixQ& m);

MatrixQ to_rational(const MatrixZ& m);

/// Converts an integral rational matrix; throws InvalidInput otherwise.
MatrixZ to_integer(const MatrixQ& m);

/// Row-style Hermite normal form. Returns the nonzero rows of H with H = U * A
/// for some unimodular U; rows are upper-triangular with positive pivots and
/// reduced entries above each pivot.
MatrixZ hermite_normal_form(const MatrixZ& a);

/// For independent integer columns W (n x k) returns a unimodular n x n matrix
/// whose first k columns span (Q-span of W) intersected with Z^n.
MatrixZ saturating_completion(const MatrixZ& w);

/// Incrementally maintained Q-span; `add` returns false for dependent vectors.
class SpanBuilder {
 public:
  explicit SpanBuilder(Index dim) : dim_(dim) {}

  bool contains(const VectorQ& v) const;
  bool add(const VectorQ& v);
  Index dimension() const { return static_cast<Index>(rows_.size()); }
  Index ambient_dimension() const { return dim_; }

 private:
  VectorQ reduce(VectorQ v) const;

  Index dim_;
  std::vector<VectorQ> rows_;  // echelon rows, pivot entry normalized to 1
  std::vector<Index> pivots_;
};

}  // namespace succmin::exact
