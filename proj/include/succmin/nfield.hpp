#pragma once

// Exact arithmetic in Q[x]/(f), flags, flag types and tower types of bases.

#include "succmin/core.hpp"
#include "succmin/polynomial.hpp"
#include "succmin/radix.hpp"

#include <span>
#include <utility>

namespace succmin::nfield {

/// Coordinates with respect to the power basis 1, x, ..., x^{n-1}.
struct FieldElement {
  VectorQ coeffs;

  Index size() const { return coeffs.size(); }
  bool is_zero() const;
  /// True when the element is a rational number (only the constant term set).
  bool is_rational() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coeffs == b.coeffs; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.coeffs + b.coeffs}; }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.coeffs - b.coeffs}; }
  friend FieldElement operator-(const FieldElement& a) { return {-a.coeffs}; }
  friend FieldElement operator*(const Rational& c, const FieldElement& a) { return {c * a.coeffs}; }
};

class NumberField {
 public:
  /// `min_poly` lists c_0, ..., c_{n-1}, 1. Throws InvalidInput unless it is
  /// monic of degree >= 2 and squarefree.
  explicit NumberField(poly::PolyZ min_poly);

  int degree() const { return n_; }
  const poly::PolyZ& min_poly() const { return min_poly_; }
  poly::Irreducibility irreducibility() const { return irreducibility_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement rational(const Rational& q) const;
  /// x^k reduced modulo the minimal polynomial, any k >= 0.
  FieldElement power_of_generator(int k) const;
  FieldElement element(VectorQ coeffs) const;

  FieldElement multiply(const FieldElement& a, const FieldElement& b) const;
  FieldElement power(const FieldElement& a, unsigned e) const;
  /// Column k holds the coordinates of a * x^k.
  MatrixQ multiplication_matrix(const FieldElement& a) const;
  Rational trace(const FieldElement& a) const;
  /// Throws InvalidInput for zero.
  FieldElement inverse(const FieldElement& a) const;

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.min_poly_ == b.min_poly_; }

 private:
  void check(const FieldElement& a) const;

  poly::PolyZ min_poly_;
  int n_ = 0;
  std::vector<VectorQ> reduced_powers_;  // x^k for k in [0, 2n-2]
  std::vector<Rational> power_traces_;   // Tr(x^k) for k in [0, n)
  poly::Irreducibility irreducibility_ = poly::Irreducibility::Unverified;
};

FieldElement element_mul(const FieldElement& a, const FieldElement& b, const NumberField& field);

/// [Q(a) : Q] by exact rank of 1, a, a^2, ...
int element_degree(const FieldElement& a, const NumberField& field);

/// [Q(S) : Q] for the field generated by the given elements.
int generated_degree(std::span<const FieldElement> elements, const NumberField& field);

/// Basis v_0 = 1, v_1, ..., v_{n-1} of the field; F_i = span(v_0..v_i).
class Flag {
 public:
  /// Throws InvalidFlag when v_0 != 1, the count is not n, or the elements
  /// are dependent.
  Flag(std::vector<FieldElement> basis, const NumberField& field);

  const std::vector<FieldElement>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const FieldElement& operator[](int i) const { return basis_[static_cast<std::size_t>(i)]; }

  /// Coordinates of `a` in this basis.
  VectorQ coordinates(const FieldElement& a) const;

 private:
  std::vector<FieldElement> basis_;
  MatrixQ to_coordinates_;
};

/// T : [n] x [n] -> [n], symmetric, T(i,0) = i, nondecreasing in i.
class FlagType {
 public:
  explicit FlagType(Eigen::MatrixXi table);

  static bool satisfies_axioms(const Eigen::MatrixXi& table);

  int degree() const { return static_cast<int>(table_.rows()); }
  int operator()(int i, int j) const { return table_(i, j); }
  const Eigen::MatrixXi& table() const { return table_; }

  friend bool operator==(const FlagType& a, const FlagType& b) { return a.table_ == b.table_; }

 private:
  Eigen::MatrixXi table_;
};

FlagType flag_type(const Flag& flag, const NumberField& field);

/// Pairs 0 < i, j < n with T(i-1,j) < T(i,j) and T(i,j-1) < T(i,j), sorted.
std::vector<std::pair<int, int>> corners(const FlagType& type);

/// Relative degrees of the distinct fields Q(v_0, ..., v_i).
radix::TowerType tower_type_of_basis(std::span<const FieldElement> basis, const NumberField& field);
radix::TowerType tower_type_of_basis(const Flag& flag, const NumberField& field);

/// Basis v_i = alpha_1^{i_1} ... alpha_t^{i_t} with (i_1..i_t) the mixed-radix
/// digits of i. Throws InvalidInput when the generators do not realize the
/// tower degrees.
Flag lexicographic_basis(const radix::TowerType& tower, std::span<const FieldElement> generators,
                         const NumberField& field);

/// A field with generators for every tower type of degree n: Q(2^{1/n}) with
/// alpha_s = theta^{n / (n_1 ... n_s)}.
struct TowerConstruction {
  NumberField field;
  std::vector<FieldElement> generators;
  Flag flag;
};
TowerConstruction radical_tower_construction(const radix::TowerType& tower);

struct PrimitiveCombination {
  std::vector<Integer> coefficients;
  FieldElement generator;
};

/// Nonzero integers a_k with |a_k| <= m(m-1), m = [base(S) : base], such that
/// base(sum a_k s_k) = base(S). Searches boxes in increasing max-norm order.
/// Throws ContradictionError if the search fails.
PrimitiveCombination primitive_combination(std::span<const FieldElement> elements, const NumberField& field,
                                           std::span<const FieldElement> base = {});

}  // namespace succmin::nfield
