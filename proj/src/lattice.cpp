#include "succmin/lattice.hpp"

#include "succmin/geometry.hpp"
#include "succmin/linalg.hpp"

#include <algorithm>

namespace succmin::lattice {

StructureConstants structure_constants(const Flag& basis, const NumberField& field) {
  const int n = basis.size();
  StructureConstants pi(static_cast<std::size_t>(n), MatrixQ::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      VectorQ c = basis.coordinates(field.multiply(basis[i], basis[j]));
      for (int k = 0; k < n; ++k) pi[static_cast<std::size_t>(k)](i, j) = pi[static_cast<std::size_t>(k)](j, i) = c(k);
    }
  }
  return pi;
}

bool is_order(const Flag& basis, const NumberField& field) {
  for (const auto& m : structure_constants(basis, field))
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (!is_integer(m(i, j))) return false;
  return true;
}

OrderBasis::OrderBasis(NumberField field, std::vector<FieldElement> elements)
    : field_(std::move(field)), flag_(std::move(elements), field_) {
  if (!is_order(flag_, field_)) throw InvalidInput("basis is not closed under multiplication");
}

OrderBasis equation_order(const NumberField& field) {
  std::vector<FieldElement> b;
  for (int k = 0; k < field.degree(); ++k) b.push_back(field.power_of_generator(k));
  return OrderBasis(field, std::move(b));
}

namespace {

std::optional<MatrixQ> coordinate_map(std::span<const FieldElement> elements, int n) {
  if (static_cast<int>(elements.size()) != n) return std::nullopt;
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) {
    if (elements[static_cast<std::size_t>(i)].coeffs.size() != n) return std::nullopt;
    m.col(i) = elements[static_cast<std::size_t>(i)].coeffs;
  }
  if (exact::rank(m) < n) return std::nullopt;
  return exact::inverse(m);
}

}  // namespace

bool is_fractional_ideal(std::span<const FieldElement> ideal, const OrderBasis& order) {
  auto inv = coordinate_map(ideal, order.degree());
  if (!inv) return false;
  for (const auto& w : order.elements()) {
    for (const auto& u : ideal) {
      VectorQ c = *inv * order.field().multiply(w, u).coeffs;
      for (Index k = 0; k < c.size(); ++k)
        if (!is_integer(c(k))) return false;
    }
  }
  return true;
}

IdealBasis::IdealBasis(const OrderBasis& order, std::vector<FieldElement> elements)
    : order_(order), elements_(std::move(elements)) {
  auto inv = coordinate_map(elements_, order_.degree());
  if (!inv) throw InvalidInput("ideal basis must have n independent elements");
  if (!is_fractional_ideal(elements_, order_)) throw InvalidInput("lattice is not a module over the order");
  to_coordinates_ = *inv;
}

IdealBasis ideal_from_generators(const OrderBasis& order, std::span<const FieldElement> generators) {
  const int n = order.degree();
  std::vector<VectorQ> rows;
  for (const auto& g : generators)
    for (const auto& w : order.elements()) rows.push_back(order.field().multiply(w, g).coeffs);
  if (rows.empty()) throw InvalidInput("ideal needs at least one generator");
  MatrixQ m(static_cast<Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r].transpose();
  // Work in coordinates of the order basis so the HNF is over the right lattice.
  MatrixQ to_order(n, n);
  for (int i = 0; i < n; ++i) to_order.col(i) = order.elements()[static_cast<std::size_t>(i)].coeffs;
  MatrixQ coords = m * exact::inverse(to_order).transpose();
  Integer den = exact::common_denominator(coords);
  MatrixZ h = exact::hermite_normal_form(exact::to_integer(coords * Rational(den)));
  if (h.rows() != n) throw InvalidInput("generators are all zero");
  std::vector<FieldElement> basis;
  for (int r = 0; r < n; ++r) {
    VectorQ c = exact::to_rational(MatrixZ(h.row(r).transpose())) / Rational(den);
    basis.push_back({to_order * c});
  }
  return IdealBasis(order, std::move(basis));
}

Rational discriminant(std::span<const FieldElement> basis, const NumberField& field) {
  const Index n = static_cast<Index>(basis.size());
  MatrixQ t(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      t(i, j) = t(j, i) =
          field.trace(field.multiply(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]));
  Rational d = exact::determinant(t);
  return d < 0 ? Rational(-d) : d;
}

Rational discriminant(const OrderBasis& order) {
  return discriminant(std::span<const FieldElement>(order.elements()), order.field());
}

std::vector<std::vector<int>> tie_groups(const MinimaResult& minima) {
  std::vector<std::vector<int>> groups;
  const Real rel = Real(1) / Real("1e20");
  for (std::size_t i = 0; i < minima.lambdas.size(); ++i) {
    const auto& cur = minima.lambdas[i];
    bool tied = false;
    if (!groups.empty()) {
      const auto& prev = minima.lambdas[i - 1];
      tied = cur.lower() <= prev.upper() || bmp::abs(cur.mid - prev.mid) <= rel * cur.mid;
    }
    if (tied)
      groups.back().push_back(static_cast<int>(i));
    else
      groups.push_back({static_cast<int>(i)});
  }
  return groups;
}

radix::TowerType order_tower_type(const OrderBasis& order, const MinimaResult& minima) {
  std::vector<int> parts;
  int previous = 1;
  for (const auto& g : tie_groups(minima)) {
    std::size_t end = static_cast<std::size_t>(g.back()) + 1;
    int d = nfield::generated_degree(std::span<const FieldElement>(minima.witnesses).subspan(0, end), order.field());
    if (d != previous) {
      parts.push_back(d / previous);
      previous = d;
    }
  }
  if (previous != order.degree()) throw ContradictionError("minima witnesses do not generate the field");
  return radix::TowerType(std::move(parts));
}

std::vector<Real> minkowski_type(const OrderBasis& order, const MinimaResult& minima) {
  Rational delta = discriminant(order);
  if (delta <= 1) throw DegenerateInput("Minkowski type needs discriminant > 1");
  PrecisionScope scope(minima.precision);
  Real log_delta = bmp::log(to_real(delta));
  std::vector<Real> out;
  for (std::size_t i = 1; i < minima.lambdas.size(); ++i) out.push_back(bmp::log(minima.lambdas[i].mid) / log_delta);
  return out;
}

std::vector<Real> minkowski_type(const OrderBasis& order, unsigned bits) {
  if (discriminant(order) <= 1) throw DegenerateInput("Minkowski type needs discriminant > 1");
  return minkowski_type(order, successive_minima(order, bits));
}

// ---------------------------------------------------------------------------

Integer MRule::M(long t) const { return bmp::pow(scale(t), static_cast<unsigned>(d)); }

MRule m_rule(const FamilySpec& spec) {
  MRule rule;
  Integer d = 1;
  for (Index i = 0; i < spec.x.size(); ++i) d = lcm(d, denominator(spec.x(i)));
  rule.d = d.convert_to<long>();
  Integer L = 1;
  for (const auto& m : structure_constants(spec.basis, spec.field)) L = lcm(L, exact::common_denominator(m));
  rule.L = L;
  return rule;
}

void validate_family(const FamilySpec& spec) {
  const int n = spec.field.degree();
  if (spec.x.size() != n - 1)
    throw ConstructionError("exponent vector needs " + std::to_string(n - 1) + " entries");
  for (Index i = 0; i < spec.x.size(); ++i)
    if (spec.x(i) < 0) throw ConstructionError("exponents must be nonnegative");
  auto p = geometry::flag_polytope(nfield::flag_type(spec.basis, spec.field));
  if (!geometry::contains(p, spec.x)) throw ConstructionError("x lies outside the polytope of the seed flag type");
  if (is_order(spec.basis, spec.field)) return;
  auto vs = geometry::vertices(p);
  for (const auto& c : p.inequalities()) {
    bool implicit = std::all_of(vs.begin(), vs.end(), [&](const VectorQ& v) { return c.a.dot(v) == c.b; });
    if (!implicit && c.a.dot(spec.x) == c.b)
      throw ConstructionError("x lies on the boundary (" + c.label + ") and the seed basis is not an order");
  }
}

FamilyMember family_member(const FamilySpec& spec, const Integer& scale) {
  if (scale < 1) throw ConstructionError("family scale must be positive");
  MRule rule = m_rule(spec);
  std::vector<FieldElement> elems{spec.field.one()};
  for (Index i = 0; i < spec.x.size(); ++i) {
    Rational e = spec.x(i) * Rational(rule.d);
    Integer factor = bmp::pow(scale, numerator(e).convert_to<unsigned>());
    elems.push_back(Rational(factor) * spec.basis[static_cast<int>(i + 1)]);
  }
  Integer M = bmp::pow(scale, static_cast<unsigned>(rule.d));
  try {
    return FamilyMember{M, scale, OrderBasis(spec.field, std::move(elems))};
  } catch (const InvalidFlag&) {
    throw;
  } catch (const InvalidInput&) {
    throw ConstructionError("member with M = " + succmin::to_string(M) + " is not an order");
  }
}

std::vector<FamilyMember> family_construct(const FamilySpec& spec, int count) {
  if (count < 0) throw InvalidInput("count must be nonnegative");
  validate_family(spec);
  MRule rule = m_rule(spec);
  std::vector<FamilyMember> out;
  for (long t = 1; t <= count; ++t) out.push_back(family_member(spec, rule.scale(t)));
  return out;
}

std::vector<FamilyMember> family_construct(const FamilySpec& spec, const std::vector<Integer>& m_values) {
  validate_family(spec);
  MRule rule = m_rule(spec);
  std::vector<Integer> sorted = m_values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<FamilyMember> out;
  for (const auto& M : sorted) {
    if (M < 1) throw ConstructionError("M must be positive");
    Integer root;
    int exact = mpz_root(root.backend().data(), M.backend().data(), static_cast<unsigned long>(rule.d));
    if (!exact) throw ConstructionError("M = " + succmin::to_string(M) + " is not a perfect " + std::to_string(rule.d) + "-th power");
    out.push_back(family_member(spec, root));
  }
  return out;
}

NumberField counterexample_deg8_field() {
  poly::PolyZ f(9, Integer(0));
  f[0] = -2;
  f[8] = 1;
  return NumberField(f);
}

Flag counterexample_deg8_basis(const NumberField& field, const Rational& M) {
  if (field.degree() != 8) throw InvalidInput("counterexample lives in degree 8");
  if (M <= 0) throw InvalidInput("M must be positive");
  // (power of theta, exponent of M) for 1, b, a, ab, b^2, ab^2, b^3, ab^3
  const int power[8] = {0, 1, 4, 5, 2, 6, 3, 7};
  const unsigned expo[8] = {0, 4, 5, 5, 8, 8, 12, 12};
  std::vector<FieldElement> b;
  for (int i = 0; i < 8; ++i) b.push_back(Rational(bmp::pow(numerator(M), expo[i]), bmp::pow(denominator(M), expo[i])) * field.power_of_generator(power[i]));
  return Flag(std::move(b), field);
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

InequalityCheck check_inequality(const MinimaResult& order_minima, const MinimaResult& lattice_minima, int n, int i,
                                 int j, int k, const Tolerances& tol) {
  const int size = static_cast<int>(lattice_minima.lambdas.size());
  for (int idx : {i, j, k})
    if (idx < 0 || idx >= size) throw RangeError("minimum index " + std::to_string(idx) + " out of range");
  PrecisionScope scope(std::max(order_minima.precision, lattice_minima.precision));
  const auto& li = order_minima.lambdas[static_cast<std::size_t>(i)];
  const auto& lj = lattice_minima.lambdas[static_cast<std::size_t>(j)];
  const auto& lk = lattice_minima.lambdas[static_cast<std::size_t>(k)];
  InequalityCheck out;
  out.i = i;
  out.j = j;
  out.k = k;
  out.bound = bmp::sqrt(Real(n));
  out.ratio = lk.mid / (li.mid * lj.mid);
  Real rhs_lo = out.bound * li.lower() * lj.lower();
  Real rhs_hi = out.bound * li.upper() * lj.upper();
  if (lk.upper() <= rhs_lo)
    out.verdict = Verdict::Holds;
  else if (lk.lower() > rhs_hi * (1 + Real(tol.verdict_band)))
    out.verdict = Verdict::Fails;
  else
    out.verdict = Verdict::Inconclusive;
  return out;
}

InequalityCheck check_inequality(const OrderBasis& order, const std::optional<IdealBasis>& ideal, int i, int j,
                                 int k, unsigned bits, const Tolerances& tol) {
  MinimaResult mo = successive_minima(order, bits);
  if (!ideal) return check_inequality(mo, mo, order.degree(), i, j, k, tol);
  MinimaResult mi = successive_minima(*ideal, bits);
  return check_inequality(mo, mi, order.degree(), i, j, k, tol);
}

std::vector<InboundWitness> inbound_witness(const OrderBasis& order, const IdealBasis& ideal, int i, int j,
                                            unsigned bits, const Tolerances& tol) {
  const int n = order.degree();
  if (i < 0 || i >= n || j < 0 || j >= n) throw RangeError("witness index out of range");
  MinimaResult mo = successive_minima(order, bits);
  MinimaResult mi = successive_minima(ideal, bits);
  auto inv = coordinate_map(mi.witnesses, n);
  if (!inv) throw ContradictionError("ideal minima witnesses are dependent");
  FieldElement prod = order.field().multiply(mo.witnesses[static_cast<std::size_t>(i)],
                                             mi.witnesses[static_cast<std::size_t>(j)]);
  VectorQ c = *inv * prod.coeffs;
  std::vector<InboundWitness> out;
  for (int k = 0; k < n; ++k) {
    if (c(k) == 0) continue;
    out.push_back({k, c(k), check_inequality(mo, mi, n, i, j, k, tol)});
  }
  return out;
}

PrimitiveBounds primitive_bounds_check(const OrderBasis& order, unsigned bits) {
  const int n = order.degree();
  MinimaResult m = successive_minima(order, bits);
  PrecisionScope scope(m.precision);
  Real delta = to_real(discriminant(order));
  Real nr(n);
  Real vn = unit_ball_volume(n);
  Real two_n = bmp::pow(Real(2), n);
  Real fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  const int pairs = n * (n - 1) / 2;

  PrimitiveBounds out;
  out.lambda1 = m.lambdas[1].mid;
  out.c_upper = bmp::pow(two_n * bmp::pow(nr, -Real(n) / 2) / vn, Real(1) / Real(n - 1));
  out.c_lower = bmp::pow(two_n / (fact * vn) * bmp::pow(nr, -Real(n) / 2 - Real((n - 1) * (n - 2)) / 4),
                         Real(1) / Real(pairs));
  out.upper = out.c_upper * bmp::pow(delta, Real(1) / Real(2 * (n - 1)));
  out.lower = out.c_lower * bmp::pow(delta, Real(1) / Real(n * (n - 1)));
  out.upper_holds = m.lambdas[1].upper() <= out.upper;
  out.lower_holds = out.lower <= m.lambdas[1].lower();
  return out;
}

MinkowskiSandwich minkowski_sandwich(const OrderBasis& order, const MinimaResult& minima) {
  const int n = order.degree();
  PrecisionScope scope(minima.precision);
  Real det = bmp::sqrt(to_real(discriminant(order))) * bmp::pow(Real(n), -Real(n) / 2);
  Real two_n = bmp::pow(Real(2), n);
  Real fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  MinkowskiSandwich out;
  out.lower = two_n / fact * det;
  out.upper = two_n * det;
  Real prod_lo = 1, prod_hi = 1;
  out.middle = unit_ball_volume(n);
  for (const auto& l : minima.lambdas) {
    out.middle *= l.mid;
    prod_lo *= l.lower();
    prod_hi *= l.upper();
  }
  Real vn = unit_ball_volume(n);
  out.holds = out.lower <= vn * prod_hi && vn * prod_lo <= out.upper;
  return out;
}

}  // namespace succmin::lattice
