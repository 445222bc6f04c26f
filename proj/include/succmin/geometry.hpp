#pragma once

// Exact rational polytopes in R^{n-1}: Lenstra polytopes, flag-type polytopes,
// vertex enumeration and union containment.
//
// Coordinate x_k (k = 1..n-1) is stored at index k-1.

#include "succmin/core.hpp"
#include "succmin/nfield.hpp"
#include "succmin/radix.hpp"

#include <optional>

namespace succmin::geometry {

/// <a, x> <= b (inequality) or <a, x> = b (equality).
struct Constraint {
  VectorQ a;
  Rational b;
  std::string label;
};

class RationalPolytope {
 public:
  explicit RationalPolytope(Index dim);

  Index dim() const { return dim_; }
  const std::vector<Constraint>& equalities() const { return equalities_; }
  const std::vector<Constraint>& inequalities() const { return inequalities_; }

  /// Both adders normalize to a primitive integer row and drop exact
  /// duplicates (keeping the first label). Trivially true rows are dropped.
  void add_equality(VectorQ a, Rational b, std::string label = {});
  void add_inequality(VectorQ a, Rational b, std::string label = {});

 private:
  Index dim_;
  std::vector<Constraint> equalities_;
  std::vector<Constraint> inequalities_;
  std::vector<std::string> keys_;
};

/// Sum x_i = 1/2, 0 <= x_1 <= ... <= x_{n-1}, and x_{i+j} <= x_i + x_j for
/// every non-overflowing i + j.
RationalPolytope lenstra_polytope(const radix::TowerType& tower);

/// Sum x_i = 1/2, the chain, and x_{T(i,j)} <= x_i + x_j; rows with
/// T(i,j) <= max(i,j) follow from the chain and are omitted.
RationalPolytope flag_polytope(const nfield::FlagType& type);

/// Builds the row x_k - x_i - x_j <= 0 in ambient dimension `dim`.
Constraint sum_constraint(Index dim, int k, int i, int j);

/// Throws InvalidInput on dimension mismatch.
bool contains(const RationalPolytope& p, const VectorQ& x);

/// Exact vertex set, sorted lexicographically; empty iff P is empty.
/// Throws UnboundedPolytope if P is nonempty and unbounded.
std::vector<VectorQ> vertices(const RationalPolytope& p);

/// Affine dimension; -1 for the empty polytope.
int dimension(const RationalPolytope& p);

/// Centroid of the vertices. Throws EmptyPolytope.
VectorQ relative_interior_point(const RationalPolytope& p);

/// True iff P meets {<a,x> = b} in a face of dimension dim(P) - 1.
bool is_facet(const RationalPolytope& p, const Constraint& c);

/// Inequalities of P that define facets, one per facet.
std::vector<Constraint> facets(const RationalPolytope& p);

struct UnionResult {
  bool contained = false;
  std::optional<VectorQ> witness;  // in P and in none of the Qs
  std::size_t cells = 0;
};

/// Decides P within the union of the Qs exactly by recursive subdivision.
/// Throws ResourceLimit after `cell_budget` cells.
UnionResult union_contains(const RationalPolytope& p, const std::vector<RationalPolytope>& qs,
                           std::size_t cell_budget = 1000000);

/// Lenstra polytopes of all tower types of degree n.
std::vector<RationalPolytope> spectrum_union(int n);

}  // namespace succmin::geometry
