#pragma once

// Splitting types of pushforwards along degree-n covers of the projective
// line: h0 identities, logarithmic minima and the bounds on scrollar
// invariants.

#include "succmin/core.hpp"
#include "succmin/nfield.hpp"

namespace succmin::scrollar {

/// pi_* L = O(-a_0) + ... + O(-a_{n-1}) with a sorted ascending.
struct SplittingType {
  int n = 0;
  long g = 0;
  long degL = 0;
  std::vector<long> a;
};

/// Throws InvalidInput unless n >= 1, g >= 0, a has n sorted entries and
/// sum a_i = g + n - 1 - degL.
void validate(const SplittingType& s);

/// True for the structure sheaf: degL = 0 and a_0 = 0.
bool is_structure_sheaf(const SplittingType& s);

/// sum_i max(0, j + 1 - a_i).
long h0(const SplittingType& s, long j);

/// h(first), h(first + 1), ...
struct H0Table {
  long first = 0;
  std::vector<long> values;
};

H0Table h0_table(const SplittingType& s, long first, long last);

/// a_i = min { j : h(j) - h(j - 1) >= i + 1 }. The table must start where h
/// vanishes and run until the differences reach n; throws InvalidInput when
/// no splitting type produces it.
std::vector<long> minima_from_h0(const H0Table& h, int n);

/// n a_{n-1} <= 2g - 2 + 2n. Requires the structure-sheaf normalization.
bool maroni_check(const SplittingType& s);

struct DpBounds {
  Rational lower, upper;  // (g+n-1)/binom(n,2) and (g+n+1)/(n-1)
  bool lower_holds = false, upper_holds = false;
  bool holds() const { return lower_holds && upper_holds; }
};

/// lower <= a_1 <= upper. Requires n >= 2 and the structure-sheaf
/// normalization.
DpBounds dp_bounds(const SplittingType& s);
bool dp_bounds_check(const SplittingType& s);

struct Violation {
  int i = 0, j = 0, k = 0;  // a_k(L) > a_i(O) + a_j(L) with k = T(i, j)
};

/// Every (i, j) with a_{T(i,j)}(L) > a_i(O) + a_j(L).
std::vector<Violation> scrollar_constraints(const SplittingType& s_o, const SplittingType& s_l,
                                            const nfield::FlagType& t);

/// The largest flag type T with a_{T(i,j)} <= a_i + a_j, or T(i,j) = max(i,j)
/// when a larger index is not allowed.
nfield::FlagType tightest_flag_type(const SplittingType& s);

/// (a_1, ..., a_{n-1}) / (2 (g + n - 1)).
VectorQ geometric_minkowski_type(const SplittingType& s);

}  // namespace succmin::scrollar
