#pragma once

// Replacing an order by a nearby order whose minima basis has a prescribed
// tower type.

#include "succmin/lattice.hpp"

namespace succmin::lattice {

/// Z + D L for a full-rank lattice L inside the order with [O : L] dividing
/// D. When L's first basis element is 1 the result is (1, D u_1, ...,
/// D u_{n-1}). Throws InvalidInput if L is not inside O or the index does not
/// divide D.
OrderBasis stabilize_order(std::span<const FieldElement> lattice, const OrderBasis& order, const Integer& D);

struct Approximation {
  OrderBasis order;                         // Z<1, D v'_1, ..., D v'_{n-1}>
  std::vector<FieldElement> basis;          // v'_0 .. v'_{n-1}
  std::vector<std::vector<Integer>> combinations;  // coefficients used at each replaced step
  std::vector<int> replaced;                // indices i where v'_i != v_i
  Integer index;                            // D = [O : Z<v'>]
  radix::TowerType tower;                   // tower type of the new basis
};

/// Walks the minima witnesses of O. A witness is kept when it leaves the
/// field degree unchanged or reaches the next tower degree; otherwise the
/// shortest run v_i..v_j that reaches the next degree is replaced by a
/// primitive combination with coefficients at most n_l (n_l - 1). Throws
/// InvalidInput when the witnesses cannot realize `target`.
Approximation approximate_order(const OrderBasis& order, const radix::TowerType& target, unsigned bits = 128);

/// 2^{3n/2} pi^{n/2} / Gamma(n/2 + 1), the bound on the index D when the
/// minima basis already has the target tower type.
Real approximation_index_bound(int n);

}  // namespace succmin::lattice
