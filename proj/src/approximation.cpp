#include "succmin/approximation.hpp"

#include "succmin/linalg.hpp"

namespace succmin::lattice {

namespace {

MatrixZ order_coordinates(std::span<const FieldElement> elems, const OrderBasis& order) {
  const int n = order.degree();
  if (static_cast<int>(elems.size()) != n) throw InvalidInput("lattice needs exactly n basis elements");
  MatrixQ c(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& e = elems[static_cast<std::size_t>(i)];
    if (e.coeffs.size() != n) throw InvalidInput("lattice element does not belong to the field");
    c.col(i) = order.flag().coordinates(e);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!is_integer(c(i, j))) throw InvalidInput("lattice is not contained in the order");
  return exact::to_integer(c);
}

FieldElement from_coordinates(const VectorZ& c, const OrderBasis& order) {
  FieldElement x = order.field().zero();
  for (Index k = 0; k < c.size(); ++k)
    if (c(k) != 0) x = x + Rational(c(k)) * order.elements()[static_cast<std::size_t>(k)];
  return x;
}

}  // namespace

OrderBasis stabilize_order(std::span<const FieldElement> lattice, const OrderBasis& order, const Integer& D) {
  if (D < 1) throw InvalidInput("D must be a positive integer");
  const int n = order.degree();
  MatrixZ c = order_coordinates(lattice, order);
  Integer index = exact::determinant(c);
  if (index < 0) index = -index;
  if (index == 0) throw InvalidInput("lattice elements are dependent");
  if (D % index != 0) throw InvalidInput("[O : L] = " + to_string(index) + " does not divide D");

  const FieldElement one = order.field().one();
  std::vector<FieldElement> basis;
  if (lattice[0] == one) {
    basis.push_back(one);
    for (int i = 1; i < n; ++i) basis.push_back(Rational(D) * lattice[static_cast<std::size_t>(i)]);
  } else {
    // HNF of 1, D l_0, ..., D l_{n-1}, then a basis of it starting with 1.
    MatrixZ gens(n + 1, n);
    VectorQ one_coords = order.flag().coordinates(one);
    gens.row(0) = exact::to_integer(one_coords).transpose();
    for (int i = 0; i < n; ++i) gens.row(i + 1) = (D * c.col(i)).transpose();
    MatrixZ h = exact::hermite_normal_form(gens);
    MatrixZ b = h.transpose();  // columns span Z + D L
    VectorQ e = *exact::solve(exact::to_rational(b), one_coords);
    MatrixZ u = exact::saturating_completion(exact::to_integer(e));
    MatrixZ nb = b * u;
    for (int i = 0; i < n; ++i) basis.push_back(from_coordinates(nb.col(i), order));
    if (basis[0] == -one) basis[0] = one;
    if (!(basis[0] == one)) throw ContradictionError("1 is not primitive in Z + D L");
  }
  try {
    return OrderBasis(order.field(), std::move(basis));
  } catch (const InvalidInput&) {
    throw ContradictionError("Z + D L is not closed under multiplication");
  }
}

Approximation approximate_order(const OrderBasis& order, const radix::TowerType& target, unsigned bits) {
  const int n = order.degree();
  if (target.degree() != n) throw InvalidInput("tower type degree differs from the field degree");
  const NumberField& K = order.field();
  MinimaResult m = successive_minima(order, bits);
  const auto& v = m.witnesses;
  if (!(v[0] == K.one())) throw ContradictionError("first minimum of an order is not 1");

  std::vector<FieldElement> vp{v[0]};
  std::vector<std::vector<Integer>> combos;
  std::vector<int> replaced;
  int s = 0;  // current field is the s-th prefix of the target
  auto degree_with = [&](std::size_t from, std::size_t to) {
    std::vector<FieldElement> gens = vp;
    for (std::size_t l = from; l <= to; ++l) gens.push_back(v[l]);
    return nfield::generated_degree(gens, K);
  };

  for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) {
    const int cur = target.prefix_degree(s);
    const int next = s < target.length() ? target.prefix_degree(s + 1) : cur;
    int d = degree_with(i, i);
    if (d == cur || d == next) {
      if (d != cur) ++s;
      vp.push_back(v[i]);
      continue;
    }
    std::size_t j = i + 1;
    for (; j < static_cast<std::size_t>(n); ++j) {
      d = degree_with(i, j);
      if (d >= next) break;
    }
    if (j == static_cast<std::size_t>(n) || d != next)
      throw InvalidInput("minima witnesses cannot realize tower type " + target.to_string());
    auto pc = nfield::primitive_combination(std::span<const FieldElement>(v).subspan(i, j - i + 1), K, vp);
    vp.push_back(pc.generator);
    combos.push_back(pc.coefficients);
    replaced.push_back(static_cast<int>(i));
    ++s;
  }

  MatrixZ c = order_coordinates(vp, order);
  Integer D = exact::determinant(c);
  if (D < 0) D = -D;
  OrderBasis stabilized = stabilize_order(vp, order, D);
  radix::TowerType tower = nfield::tower_type_of_basis(stabilized.flag(), K);
  if (!(tower == target)) throw ContradictionError("approximation produced tower type " + tower.to_string());
  return Approximation{std::move(stabilized), std::move(vp), std::move(combos), std::move(replaced), D, tower};
}

Real approximation_index_bound(int n) {
  return bmp::pow(Real(2), Real(3 * n) / 2) * unit_ball_volume(n);
}

}  // namespace succmin::lattice
