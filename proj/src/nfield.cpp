#include "succmin/nfield.hpp"

#include "succmin/linalg.hpp"

#include <algorithm>
#include <functional>

namespace succmin::nfield {

bool FieldElement::is_zero() const {
  for (Index i = 0; i < coeffs.size(); ++i)
    if (coeffs(i) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (Index i = 1; i < coeffs.size(); ++i)
    if (coeffs(i) != 0) return false;
  return true;
}

NumberField::NumberField(poly::PolyZ min_poly) : min_poly_(std::move(min_poly)) {
  if (min_poly_.size() < 3) throw InvalidInput("minimal polynomial must have degree >= 2");
  if (min_poly_.back() != 1) throw InvalidInput("minimal polynomial must be monic");
  n_ = static_cast<int>(min_poly_.size()) - 1;
  if (!poly::is_squarefree(min_poly_)) throw InvalidInput("minimal polynomial is not squarefree");
  irreducibility_ = poly::check_irreducible(min_poly_);

  const auto n = static_cast<Index>(n_);
  reduced_powers_.reserve(static_cast<std::size_t>(2 * n_ - 1));
  for (Index k = 0; k < n; ++k) {
    VectorQ e = VectorQ::Zero(n);
    e(k) = 1;
    reduced_powers_.push_back(e);
  }
  // x^n = -sum c_k x^k; each further power shifts and reduces once.
  VectorQ cur = reduced_powers_.back();
  for (int k = n_; k <= 2 * n_ - 2; ++k) {
    VectorQ next = VectorQ::Zero(n);
    Rational top = cur(n - 1);
    for (Index m = n - 1; m >= 1; --m) next(m) = cur(m - 1);
    for (Index m = 0; m < n; ++m) next(m) -= top * Rational(min_poly_[static_cast<std::size_t>(m)]);
    reduced_powers_.push_back(next);
    cur = next;
  }
  power_traces_.resize(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) {
    Rational t = 0;
    for (int m = 0; m < n_; ++m) t += reduced_powers_[static_cast<std::size_t>(m + k)](m);
    power_traces_[static_cast<std::size_t>(k)] = t;
  }
}

void NumberField::check(const FieldElement& a) const {
  if (a.coeffs.size() != n_)
    throw InvalidInput("element has " + std::to_string(a.coeffs.size()) + " coordinates, field degree is " +
                       std::to_string(n_));
}

FieldElement NumberField::zero() const { return {VectorQ::Zero(n_)}; }

FieldElement NumberField::one() const { return rational(Rational(1)); }

FieldElement NumberField::rational(const Rational& q) const {
  FieldElement e = zero();
  e.coeffs(0) = q;
  return e;
}

FieldElement NumberField::power_of_generator(int k) const {
  if (k < 0) throw RangeError("negative power");
  if (k <= 2 * n_ - 2) return {reduced_powers_[static_cast<std::size_t>(k)]};
  return power({reduced_powers_[1]}, static_cast<unsigned>(k));
}

FieldElement NumberField::element(VectorQ coeffs) const {
  FieldElement e{std::move(coeffs)};
  check(e);
  return e;
}

FieldElement NumberField::multiply(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const Index n = n_;
  std::vector<Rational> prod(static_cast<std::size_t>(2 * n_ - 1), Rational(0));
  for (Index i = 0; i < n; ++i) {
    if (a.coeffs(i) == 0) continue;
    for (Index j = 0; j < n; ++j) {
      if (b.coeffs(j) == 0) continue;
      prod[static_cast<std::size_t>(i + j)] += a.coeffs(i) * b.coeffs(j);
    }
  }
  VectorQ out = VectorQ::Zero(n);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    if (static_cast<Index>(k) < n)
      out(static_cast<Index>(k)) += prod[k];
    else
      out += prod[k] * reduced_powers_[k];
  }
  return {out};
}

FieldElement NumberField::power(const FieldElement& a, unsigned e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e) base = multiply(base, base);
  }
  return result;
}

MatrixQ NumberField::multiplication_matrix(const FieldElement& a) const {
  check(a);
  MatrixQ m(n_, n_);
  for (int k = 0; k < n_; ++k) m.col(k) = multiply(a, {reduced_powers_[static_cast<std::size_t>(k)]}).coeffs;
  return m;
}

Rational NumberField::trace(const FieldElement& a) const {
  check(a);
  Rational t = 0;
  for (int k = 0; k < n_; ++k) t += a.coeffs(k) * power_traces_[static_cast<std::size_t>(k)];
  return t;
}

FieldElement NumberField::inverse(const FieldElement& a) const {
  if (a.is_zero()) throw InvalidInput("inverse of zero");
  auto sol = exact::solve(multiplication_matrix(a), one().coeffs);
  if (!sol) throw InvalidInput("element is not invertible (reducible minimal polynomial?)");
  return {*sol};
}

FieldElement element_mul(const FieldElement& a, const FieldElement& b, const NumberField& field) {
  return field.multiply(a, b);
}

int element_degree(const FieldElement& a, const NumberField& field) {
  exact::SpanBuilder span(field.degree());
  FieldElement p = field.one();
  int d = 0;
  while (span.add(p.coeffs)) {
    ++d;
    p = field.multiply(p, a);
  }
  return d;
}

int generated_degree(std::span<const FieldElement> elements, const NumberField& field) {
  exact::SpanBuilder span(field.degree());
  std::vector<FieldElement> basis{field.one()};
  span.add(basis.front().coeffs);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    for (const auto& g : elements) {
      FieldElement p = field.multiply(basis[idx], g);
      if (span.add(p.coeffs)) basis.push_back(p);
    }
  }
  return static_cast<int>(span.dimension());
}

Flag::Flag(std::vector<FieldElement> basis, const NumberField& field) : basis_(std::move(basis)) {
  const int n = field.degree();
  if (static_cast<int>(basis_.size()) != n)
    throw InvalidFlag("flag needs " + std::to_string(n) + " elements, got " + std::to_string(basis_.size()));
  for (const auto& v : basis_) {
    if (v.coeffs.size() != n) throw InvalidFlag("flag element has the wrong number of coordinates");
  }
  if (!(basis_.front() == field.one())) throw InvalidFlag("flag must start with v_0 = 1");
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.col(i) = basis_[static_cast<std::size_t>(i)].coeffs;
  if (exact::rank(m) < n) throw InvalidFlag("flag elements are linearly dependent");
  to_coordinates_ = exact::inverse(m);
}

VectorQ Flag::coordinates(const FieldElement& a) const { return to_coordinates_ * a.coeffs; }

FlagType::FlagType(Eigen::MatrixXi table) : table_(std::move(table)) {
  if (!satisfies_axioms(table_)) throw InvalidInput("table violates the flag type axioms");
}

bool FlagType::satisfies_axioms(const Eigen::MatrixXi& t) {
  const Index n = t.rows();
  if (n < 1 || t.cols() != n) return false;
  for (Index i = 0; i < n; ++i) {
    if (t(i, 0) != i) return false;
    for (Index j = 0; j < n; ++j) {
      if (t(i, j) < 0 || t(i, j) >= n) return false;
      if (t(i, j) != t(j, i)) return false;
      if (i + 1 < n && t(i, j) > t(i + 1, j)) return false;
    }
  }
  return true;
}

FlagType flag_type(const Flag& flag, const NumberField& field) {
  const int n = flag.size();
  // highest basis index occurring in v_a * v_b
  Eigen::MatrixXi top(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      VectorQ c = flag.coordinates(field.multiply(flag[a], flag[b]));
      int h = 0;
      for (int k = n - 1; k >= 0; --k) {
        if (c(k) != 0) {
          h = k;
          break;
        }
      }
      top(a, b) = top(b, a) = h;
    }
  }
  Eigen::MatrixXi t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = top(i, j);
      if (i > 0) v = std::max(v, t(i - 1, j));
      if (j > 0) v = std::max(v, t(i, j - 1));
      t(i, j) = v;
    }
  }
  return FlagType(std::move(t));
}

std::vector<std::pair<int, int>> corners(const FlagType& type) {
  std::vector<std::pair<int, int>> out;
  const int n = type.degree();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (type(i - 1, j) < type(i, j) && type(i, j - 1) < type(i, j)) out.emplace_back(i, j);
  return out;
}

radix::TowerType tower_type_of_basis(std::span<const FieldElement> basis, const NumberField& field) {
  std::vector<int> parts;
  int previous = 1;
  for (std::size_t i = 1; i <= basis.size(); ++i) {
    int d = generated_degree(basis.subspan(0, i), field);
    if (d != previous) {
      if (d % previous != 0) throw ContradictionError("subfield degrees do not form a tower");
      parts.push_back(d / previous);
      previous = d;
    }
  }
  if (parts.empty()) throw InvalidInput("basis generates Q only");
  return radix::TowerType(std::move(parts));
}

radix::TowerType tower_type_of_basis(const Flag& flag, const NumberField& field) {
  return tower_type_of_basis(std::span<const FieldElement>(flag.basis()), field);
}

Flag lexicographic_basis(const radix::TowerType& tower, std::span<const FieldElement> generators,
                         const NumberField& field) {
  if (tower.degree() != field.degree()) throw InvalidInput("tower degree does not match field degree");
  if (static_cast<int>(generators.size()) != tower.length())
    throw InvalidInput("need one generator per tower step");
  for (int s = 1; s <= tower.length(); ++s) {
    if (generated_degree(generators.subspan(0, static_cast<std::size_t>(s)), field) != tower.prefix_degree(s))
      throw InvalidInput("generators do not realize tower " + tower.to_string());
  }
  std::vector<FieldElement> basis;
  for (int i = 0; i < tower.degree(); ++i) {
    radix::Digits d = radix::to_mixed_radix(i, tower);
    FieldElement v = field.one();
    for (std::size_t s = 0; s < d.values.size(); ++s)
      v = field.multiply(v, field.power(generators[s], static_cast<unsigned>(d.values[s])));
    basis.push_back(std::move(v));
  }
  return Flag(std::move(basis), field);
}

TowerConstruction radical_tower_construction(const radix::TowerType& tower) {
  const int n = tower.degree();
  poly::PolyZ f(static_cast<std::size_t>(n + 1), Integer(0));
  f[0] = -2;
  f.back() = 1;
  NumberField field(std::move(f));
  std::vector<FieldElement> gens;
  for (int s = 1; s <= tower.length(); ++s) gens.push_back(field.power_of_generator(n / tower.prefix_degree(s)));
  Flag flag = lexicographic_basis(tower, gens, field);
  return TowerConstruction{std::move(field), std::move(gens), std::move(flag)};
}

PrimitiveCombination primitive_combination(std::span<const FieldElement> elements, const NumberField& field,
                                           std::span<const FieldElement> base) {
  if (elements.empty()) throw InvalidInput("primitive_combination needs at least one element");
  std::vector<FieldElement> all(base.begin(), base.end());
  const int base_degree = generated_degree(all, field);
  all.insert(all.end(), elements.begin(), elements.end());
  const int target = generated_degree(all, field);
  const int m = target / base_degree;
  const int bound = std::max(1, m * (m - 1));
  const std::size_t t = elements.size();

  std::vector<FieldElement> trial(base.begin(), base.end());
  trial.push_back(field.zero());

  for (int shell = 1; shell <= bound; ++shell) {
    // positive values before negative ones at each magnitude
    std::vector<int> values;
    for (int v = 1; v <= shell; ++v) values.push_back(v);
    for (int v = 1; v <= shell; ++v) values.push_back(-v);
    std::vector<std::size_t> idx(t, 0);
    bool done = false;
    while (!done) {
      bool on_shell = false;
      FieldElement combo = field.zero();
      for (std::size_t k = 0; k < t; ++k) {
        int a = values[idx[k]];
        if (std::abs(a) == shell) on_shell = true;
        combo = combo + Rational(a) * elements[k];
      }
      if (on_shell) {
        trial.back() = combo;
        if (generated_degree(trial, field) == target) {
          std::vector<Integer> coeffs;
          for (std::size_t k = 0; k < t; ++k) coeffs.emplace_back(values[idx[k]]);
          return {std::move(coeffs), std::move(combo)};
        }
      }
      // odometer, last coordinate fastest
      done = true;
      for (std::size_t k = t; k-- > 0;) {
        if (++idx[k] < values.size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
    }
  }
  throw ContradictionError("no bounded primitive combination found; the input cannot generate a simple extension");
}

}  // namespace succmin::nfield
