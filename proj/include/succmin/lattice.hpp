#pragma once

// Orders and fractional ideals as lattices in a number field: structure
// constants, discriminants, successive minima, Minkowski types, explicit
// order families and the inequality checkers built on them.

#include "succmin/core.hpp"
#include "succmin/embedding.hpp"
#include "succmin/nfield.hpp"

#include <optional>
#include <span>

namespace succmin::lattice {

using nfield::FieldElement;
using nfield::Flag;
using nfield::NumberField;
using succmin::to_string;

/// pi[k](i, j) is the coefficient of v_k in v_i v_j.
using StructureConstants = std::vector<MatrixQ>;

StructureConstants structure_constants(const Flag& basis, const NumberField& field);

/// True iff every structure constant is an integer.
bool is_order(const Flag& basis, const NumberField& field);

class OrderBasis {
 public:
  /// Throws InvalidFlag for a bad basis and InvalidInput when the lattice is
  /// not closed under multiplication.
  OrderBasis(NumberField field, std::vector<FieldElement> elements);

  const NumberField& field() const { return field_; }
  const Flag& flag() const { return flag_; }
  const std::vector<FieldElement>& elements() const { return flag_.basis(); }
  int degree() const { return field_.degree(); }

 private:
  NumberField field_;
  Flag flag_;
};

/// Power basis of a monic integer polynomial.
OrderBasis equation_order(const NumberField& field);

/// True iff w_i u_j has integer u-coordinates for every pair.
bool is_fractional_ideal(std::span<const FieldElement> ideal, const OrderBasis& order);

class IdealBasis {
 public:
  /// Throws InvalidInput unless the elements form a basis of an O-module.
  IdealBasis(const OrderBasis& order, std::vector<FieldElement> elements);

  const OrderBasis& order() const { return order_; }
  const std::vector<FieldElement>& elements() const { return elements_; }
  /// Coordinates of `a` in this basis.
  VectorQ coordinates(const FieldElement& a) const { return to_coordinates_ * a.coeffs; }

 private:
  OrderBasis order_;
  std::vector<FieldElement> elements_;
  MatrixQ to_coordinates_;
};

/// The O-module generated by the given elements (Hermite normal form of all
/// products w_i g).
IdealBasis ideal_from_generators(const OrderBasis& order, std::span<const FieldElement> generators);

/// |det Tr(w_i w_j)|, exact.
Rational discriminant(const OrderBasis& order);
Rational discriminant(std::span<const FieldElement> basis, const NumberField& field);

struct MinimaResult {
  unsigned precision = 0;
  std::vector<Certified> lambdas;
  std::vector<VectorZ> coefficients;  // witnesses in the input basis
  std::vector<FieldElement> witnesses;
  std::size_t nodes = 0;  // enumeration tree nodes visited
};

struct MinimaOptions {
  std::size_t node_budget = 10000000;
};

/// Successive minima with witnesses. For each k the lattice basis is
/// completed from the saturation of the earlier witnesses, LLL-reduced
/// without crossing that block, and searched by Schnorr-Euchner enumeration
/// for the shortest vector outside the span. Equal norms are resolved by
/// the smallest sign-normalized coefficient vector compared from the last
/// basis element down. Throws ResourceLimit past the node budget.
MinimaResult successive_minima(const EmbeddingData& gram, const MinimaOptions& options = {});
MinimaResult successive_minima(const OrderBasis& order, unsigned bits = 128);
MinimaResult successive_minima(const IdealBasis& ideal, unsigned bits = 128);

/// Groups of indices whose minima agree within the certified radii.
std::vector<std::vector<int>> tie_groups(const MinimaResult& minima);

/// Tower type of Q(all x with |x| <= r) as r grows: the fields Q(v_0..v_m)
/// with m the last index of each tie group. Independent of tie-breaking.
radix::TowerType order_tower_type(const OrderBasis& order, const MinimaResult& minima);

/// (log_Delta lambda_1, ..., log_Delta lambda_{n-1}). Throws DegenerateInput
/// when Delta <= 1.
std::vector<Real> minkowski_type(const OrderBasis& order, const MinimaResult& minima);
std::vector<Real> minkowski_type(const OrderBasis& order, unsigned bits = 128);

// ---------------------------------------------------------------------------
// Families Z<1, M^{x_1} v_1, ..., M^{x_{n-1}} v_{n-1}>.

struct FamilySpec {
  NumberField field;
  Flag basis;
  VectorQ x;  // x_1 .. x_{n-1}
};

/// M = (L t)^d with d the lcm of the denominators of x and L the lcm of the
/// structure-constant denominators of the seed basis.
struct MRule {
  Integer L;
  long d = 1;
  Integer scale(long t) const { return L * t; }
  Integer M(long t) const;
};

MRule m_rule(const FamilySpec& spec);

struct FamilyMember {
  Integer M;
  Integer scale;  // M = scale^d
  OrderBasis order;
};

/// Validates x against the polytope of the seed flag type. Throws
/// ConstructionError if x is outside it (or on its boundary while the seed
/// is not an order).
void validate_family(const FamilySpec& spec);

/// Member with M = scale^d; throws ConstructionError if it is not an order.
FamilyMember family_member(const FamilySpec& spec, const Integer& scale);

/// The first `count` members M = (L t)^d, t = 1, 2, ...
std::vector<FamilyMember> family_construct(const FamilySpec& spec, int count);
/// Members for explicit M values, each a perfect d-th power.
std::vector<FamilyMember> family_construct(const FamilySpec& spec, const std::vector<Integer>& m_values);

/// Z<1, M^4 b, M^5 a, M^5 ab, M^8 b^2, M^8 ab^2, M^12 b^3, M^12 ab^3> in
/// Q(2^{1/8}) with b = 2^{1/8}, a = b^4. M may be any positive rational; the
/// lattice is an order for positive integers.
Flag counterexample_deg8_basis(const NumberField& field, const Rational& M);
NumberField counterexample_deg8_field();

// ---------------------------------------------------------------------------
// Inequality checks with certified verdicts.

enum class Verdict { Holds, Fails, Inconclusive };
std::string to_string(Verdict v);

struct Tolerances {
  double verdict_band = 1e-9;  // relative band treated as inconclusive
};

struct InequalityCheck {
  int i = 0, j = 0, k = 0;
  Verdict verdict = Verdict::Inconclusive;
  Real ratio;  // lambda_k / (lambda_i lambda_j)
  Real bound;  // sqrt(n)
};

/// lambda_k(I) <= sqrt(n) lambda_i(O) lambda_j(I) (I = O when absent).
InequalityCheck check_inequality(const MinimaResult& order_minima, const MinimaResult& lattice_minima, int n, int i,
                                 int j, int k, const Tolerances& tol = {});
InequalityCheck check_inequality(const OrderBasis& order, const std::optional<IdealBasis>& ideal, int i, int j,
                                 int k, unsigned bits = 128, const Tolerances& tol = {});

struct InboundWitness {
  int k = 0;
  Rational coefficient;  // of the k-th ideal witness in v_i w_j
  InequalityCheck check;
};

/// Every k with a nonzero coefficient on the k-th minima witness of I in the
/// product of the i-th witness of O with the j-th witness of I, each with
/// its checked inequality lambda_k(I) <= sqrt(n) lambda_i(O) lambda_j(I).
std::vector<InboundWitness> inbound_witness(const OrderBasis& order, const IdealBasis& ideal, int i, int j,
                                            unsigned bits = 128, const Tolerances& tol = {});

struct PrimitiveBounds {
  Real lambda1, lower, upper;  // lower <= lambda_1 <= upper expected
  Real c_lower, c_upper;       // the constants
  bool lower_holds = false, upper_holds = false;
};

/// c_1(n) Delta^{1/(n(n-1))} <= lambda_1 <= C_1(n) Delta^{1/(2(n-1))}.
PrimitiveBounds primitive_bounds_check(const OrderBasis& order, unsigned bits = 128);

struct MinkowskiSandwich {
  Real lower, middle, upper;  // (2^n/n!) det, vol(B_n) prod lambda_i, 2^n det
  bool holds = false;
};

MinkowskiSandwich minkowski_sandwich(const OrderBasis& order, const MinimaResult& minima);

}  // namespace succmin::lattice
