#include "succmin/suites.hpp"

#include "succmin/geometry.hpp"
#include "succmin/linalg.hpp"
#include "succmin/scrollar.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

namespace succmin::suites {

namespace {

using Clock = std::chrono::steady_clock;
using lattice::MinimaResult;
using lattice::OrderBasis;
using nfield::FieldElement;
using nfield::Flag;
using nfield::NumberField;

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(Clock::now()) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (result_.failures.size() < 8) result_.failures.push_back(what());
  }
  std::size_t checked() const { return checked_; }
  std::size_t failed() const { return failed_; }

  SuiteResult finish(const std::string& summary) {
    result_.passed = failed_ == 0 && checked_ > 0;
    result_.summary = summary + " (" + std::to_string(checked_) + " checks, " + std::to_string(failed_) + " failed)";
    result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  Clock::time_point start_;
  std::size_t checked_ = 0, failed_ = 0;
};

struct Sample {
  std::string label;
  OrderBasis order;
};

std::string poly_label(const poly::PolyZ& f) {
  std::string s = "[";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + to_string(f[k]);
  return s + "]";
}

poly::PolyZ radical_poly(int n, long p) {
  poly::PolyZ f(static_cast<std::size_t>(n + 1), Integer(0));
  f[0] = -p;
  f[static_cast<std::size_t>(n)] = 1;
  return f;
}

NumberField random_field(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    poly::PolyZ f(static_cast<std::size_t>(n + 1));
    for (int k = 0; k < n; ++k) f[static_cast<std::size_t>(k)] = coeff(rng);
    f[static_cast<std::size_t>(n)] = 1;
    if (f[0] == 0) continue;
    if (!poly::is_squarefree(f) || poly::check_irreducible(f) != poly::Irreducibility::Certified) continue;
    return NumberField(f);
  }
  return NumberField(radical_poly(n, 2));
}

Flag power_flag(const NumberField& K) {
  std::vector<FieldElement> b;
  for (int k = 0; k < K.degree(); ++k) b.push_back(K.power_of_generator(k));
  return Flag(std::move(b), K);
}

VectorQ random_point(const geometry::RationalPolytope& p, std::mt19937_64& rng) {
  auto vs = geometry::vertices(p);
  std::uniform_int_distribution<int> w(1, 3);
  VectorQ x = VectorQ::Zero(p.dim());
  Rational total = 0;
  for (const auto& v : vs) {
    Rational c(w(rng));
    x += c * v;
    total += c;
  }
  return x / total;
}

Integer denominator_lcm(const VectorQ& x) {
  Integer d = 1;
  for (Index i = 0; i < x.size(); ++i) d = lcm(d, denominator(x(i)));
  return d;
}

/// Member of the family through `seed` at a random interior point, or the
/// seed order itself when the point needs a large common denominator.
Sample family_sample(const NumberField& K, const Flag& seed, const std::string& label, std::mt19937_64& rng) {
  auto P = geometry::flag_polytope(nfield::flag_type(seed, K));
  VectorQ x = random_point(P, rng);
  if (denominator_lcm(x) <= 60) {
    Integer scale(2 + static_cast<long>(rng() % 3));
    try {
      auto member = lattice::family_member(lattice::FamilySpec{K, seed, x}, scale);
      return {label + " scaled by " + to_string(scale) + "^(d x)", member.order};
    } catch (const ConstructionError&) {
    }
  }
  return {label, OrderBasis(K, seed.basis())};
}

std::vector<Sample> sample_orders(const Config& cfg, int count) {
  std::mt19937_64 rng(cfg.seed);
  const long primes[] = {2, 3, 5, 7};
  std::vector<Sample> out;
  for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
    const int n = 2 + k % 7;
    const int kind = (k / 7) % 3;
    if (kind == 0) {
      NumberField K = random_field(n, rng);
      out.push_back({"Z[x]/" + poly_label(K.min_poly()), lattice::equation_order(K)});
    } else if (kind == 1) {
      long p = primes[rng() % 4];
      NumberField K(radical_poly(n, p));
      out.push_back(family_sample(K, power_flag(K), "Z[" + std::to_string(p) + "^(1/" + std::to_string(n) + ")]", rng));
    } else {
      auto towers = radix::tower_types(n);
      const auto& t = towers[rng() % towers.size()];
      auto tc = nfield::radical_tower_construction(t);
      out.push_back(family_sample(tc.field, tc.flag, "lexicographic basis of " + t.to_string(), rng));
    }
  }
  return out;
}

std::string fmt(const Real& x, int digits = 12) { return to_string(x, digits); }

// Double-precision T2 Gram matrix from the companion matrix eigenvalues.
Eigen::MatrixXd double_gram(const std::vector<FieldElement>& basis, const NumberField& K) {
  const int n = K.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -K.min_poly()[static_cast<std::size_t>(i)].convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  Eigen::VectorXcd roots = es.eigenvalues();
  const Index m = static_cast<Index>(basis.size());
  Eigen::MatrixXcd sig(m, n);
  for (Index i = 0; i < m; ++i) {
    for (int r = 0; r < n; ++r) {
      std::complex<double> v = 0, p = 1;
      for (int k = 0; k < n; ++k) {
        v += basis[static_cast<std::size_t>(i)].coeffs(k).convert_to<double>() * p;
        p *= roots(r);
      }
      sig(i, r) = v;
    }
  }
  return (sig * sig.adjoint()).real() / n;
}

// Pairwise size reduction in double precision, so the search box below stays
// small. Returns the Gram matrix of the reduced basis.
Eigen::MatrixXd pairwise_reduce(Eigen::MatrixXd g) {
  const Index n = g.rows();
  for (bool changed = true; changed;) {
    changed = false;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (i == j) continue;
        const double q = std::round(g(i, j) / g(j, j));
        if (q == 0 || g(i, i) - q * (2 * g(i, j) - q * g(j, j)) >= g(i, i) * (1 - 1e-12)) continue;
        // b_i -= q b_j
        g.row(i) -= q * g.row(j);
        g.col(i) -= q * g.col(j);
        changed = true;
      }
    }
  }
  return g;
}

// Minima by exhaustive search over the coefficient box holding every vector
// no longer than the longest (pairwise-reduced) basis vector.
std::vector<double> brute_force_minima(const Eigen::MatrixXd& gram) {
  const Eigen::MatrixXd g = pairwise_reduce(gram);
  const Index n = g.rows();
  const double r2 = g.diagonal().maxCoeff() * (1 + 1e-12);
  const Eigen::MatrixXd ginv = g.inverse();
  std::vector<long> box(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    box[static_cast<std::size_t>(i)] = static_cast<long>(std::floor(std::sqrt(r2 * ginv(i, i)) + 1e-9));
    c[static_cast<std::size_t>(i)] = -box[static_cast<std::size_t>(i)];
  }
  std::vector<std::pair<double, std::vector<long>>> pts;
  while (true) {
    double q = 0;
    bool zero = true;
    for (Index i = 0; i < n; ++i) {
      const double ci = static_cast<double>(c[static_cast<std::size_t>(i)]);
      zero = zero && ci == 0;
      double row = 0;
      for (Index j = 0; j < n; ++j) row += g(i, j) * static_cast<double>(c[static_cast<std::size_t>(j)]);
      q += ci * row;
    }
    if (!zero && q <= r2) pts.emplace_back(q, c);
    Index k = 0;
    while (k < n && ++c[static_cast<std::size_t>(k)] > box[static_cast<std::size_t>(k)]) {
      c[static_cast<std::size_t>(k)] = -box[static_cast<std::size_t>(k)];
      ++k;
    }
    if (k == n) break;
  }
  std::sort(pts.begin(), pts.end());
  exact::SpanBuilder span(n);
  std::vector<double> out;
  for (const auto& [q, coeffs] : pts) {
    VectorQ v(n);
    for (Index i = 0; i < n; ++i) v(i) = coeffs[static_cast<std::size_t>(i)];
    if (span.add(v)) out.push_back(std::sqrt(q));
    if (static_cast<Index>(out.size()) == n) break;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult overflow_residue(const Config&, int max_n) {
  Recorder rec("overflow/residue equivalence");
  for (int n = 2; n <= max_n; ++n) {
    for (int m : radix::divisors(n)) {
      if (m == 1 || m == n) continue;
      radix::TowerType t({m, n / m});
      for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j)
          rec.check(radix::overflows(i, j, t) == !radix::residue_condition(i, j, m), [&] {
            return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
          });
    }
  }
  return rec.finish("n <= " + std::to_string(max_n) + ", all proper divisors, all i + j < n");
}

SuiteResult lambda_zero(const Config& cfg, int samples) {
  Recorder rec("lambda_0 = 1");
  for (const auto& s : sample_orders(cfg, samples)) {
    MinimaResult m = lattice::successive_minima(s.order, cfg.precision);
    PrecisionScope scope(m.precision);
    rec.check(bmp::abs(m.lambdas[0].mid - 1) <= Real(cfg.value_tol) && m.witnesses[0] == s.order.field().one(),
              [&] { return s.label + ": lambda_0 = " + fmt(m.lambdas[0].mid); });
  }
  return rec.finish(std::to_string(samples) + " orders of degree 2..8");
}

SuiteResult submultiplicativity(const Config& cfg, int pairs) {
  Recorder rec("submultiplicativity |xy| <= sqrt(n)|x||y|");
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Real worst = 0;
  int fields = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int variant = 0; variant < 2; ++variant) {
      NumberField K = variant == 0 ? random_field(n, rng) : NumberField(radical_poly(n, 3));
      auto roots = lattice::isolate_roots(K.min_poly(), cfg.precision);
      PrecisionScope scope(roots.precision);
      const Real root_n = bmp::sqrt(Real(n));
      ++fields;
      for (int p = 0; p < pairs; ++p) {
        VectorQ a(n), b(n);
        for (int k = 0; k < n; ++k) {
          a(k) = coeff(rng);
          b(k) = coeff(rng);
        }
        if (a.isZero() || b.isZero()) continue;
        FieldElement x{a}, y{b};
        auto nx = lattice::t2_norm(x, K, roots);
        auto ny = lattice::t2_norm(y, K, roots);
        auto nxy = lattice::t2_norm(K.multiply(x, y), K, roots);
        Real ratio = nxy.mid / (root_n * nx.mid * ny.mid);
        worst = std::max(worst, ratio);
        rec.check(ratio <= 1 + Real(cfg.value_tol), [&] { return "field " + poly_label(K.min_poly()) + " ratio " + fmt(ratio); });
      }
    }
  }
  return rec.finish(std::to_string(fields) + " fields x " + std::to_string(pairs) +
                    " pairs, max |xy|/(sqrt(n)|x||y|) = " + fmt(worst, 6));
}

SuiteResult minkowski(const Config& cfg, int samples) {
  Recorder rec("Minkowski sandwich");
  Real lo_slack = 1e9, hi_slack = 1e9;
  for (const auto& s : sample_orders(cfg, samples)) {
    MinimaResult m = lattice::successive_minima(s.order, cfg.precision);
    auto w = lattice::minkowski_sandwich(s.order, m);
    PrecisionScope scope(m.precision);
    lo_slack = std::min(lo_slack, w.middle / w.lower);
    hi_slack = std::min(hi_slack, w.upper / w.middle);
    rec.check(w.holds, [&] {
      return s.label + ": " + fmt(w.lower) + " <= " + fmt(w.middle) + " <= " + fmt(w.upper);
    });
  }
  return rec.finish(std::to_string(samples) + " orders, min middle/lower = " + fmt(lo_slack, 6) +
                    ", min upper/middle = " + fmt(hi_slack, 6));
}

SuiteResult exthm(const Config& cfg) {
  Recorder rec("residue condition implies the product bound");
  std::mt19937_64 rng(cfg.seed + 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  lattice::Tolerances tol{cfg.verdict_band};
  std::size_t orders = 0, ideals = 0, inconclusive = 0, pairs = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto divs = radix::divisors(n);
    std::vector<Sample> samples;
    for (long p : {2L, 3L}) {
      NumberField K(radical_poly(n, p));
      samples.push_back({"Z[" + std::to_string(p) + "^(1/" + std::to_string(n) + ")]", lattice::equation_order(K)});
    }
    for (const auto& t : radix::tower_types(n)) {
      auto tc = nfield::radical_tower_construction(t);
      samples.push_back(family_sample(tc.field, tc.flag, "lexicographic basis of " + t.to_string(), rng));
    }
    for (const auto& s : samples) {
      ++orders;
      MinimaResult mo = lattice::successive_minima(s.order, cfg.precision);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; i + j < n; ++j) {
          if (!radix::exthm_condition(i, j, divs, n)) continue;
          ++pairs;
          auto c = lattice::check_inequality(mo, mo, n, i, j, i + j, tol);
          if (c.verdict == lattice::Verdict::Inconclusive) ++inconclusive;
          rec.check(c.verdict != lattice::Verdict::Fails, [&] {
            return s.label + ": lambda_" + std::to_string(i + j) + " ratio " + fmt(c.ratio) + " > sqrt(n)";
          });
        }
      }
      // an ideal generated by a random element
      VectorQ g(n);
      do {
        for (int k = 0; k < n; ++k) g(k) = coeff(rng);
      } while (g.isZero());
      std::vector<FieldElement> gens{FieldElement{g}};
      auto I = lattice::ideal_from_generators(s.order, gens);
      MinimaResult mi = lattice::successive_minima(I, cfg.precision);
      ++ideals;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; i + j < n; ++j) {
          if (!radix::exthm_condition(i, j, divs, n)) continue;
          ++pairs;
          auto c = lattice::check_inequality(mo, mi, n, i, j, i + j, tol);
          if (c.verdict == lattice::Verdict::Inconclusive) ++inconclusive;
          rec.check(c.verdict != lattice::Verdict::Fails, [&] {
            return s.label + " ideal: lambda_" + std::to_string(i + j) + "(I) ratio " + fmt(c.ratio) + " > sqrt(n)";
          });
        }
      }
    }
  }
  return rec.finish(std::to_string(orders) + " orders, " + std::to_string(ideals) + " ideals, " +
                    std::to_string(pairs) + " admissible pairs, " + std::to_string(inconclusive) + " inconclusive");
}

// ---------------------------------------------------------------------------

std::vector<Integer> default_deg8_m_values() {
  std::vector<Integer> out;
  for (long m : {100L, 200L, 500L, 1000L, 2000L, 5000L, 10000L}) out.emplace_back(m);
  return out;
}

Deg8Report counterexample_deg8(const std::vector<Integer>& m_values, const Config& cfg) {
  if (m_values.size() < 2) throw InvalidInput("need at least two values of M");
  NumberField K = lattice::counterexample_deg8_field();
  if (nfield::element_degree(K.power_of_generator(4), K) != 2 || nfield::element_degree(K.power_of_generator(1), K) != 8)
    throw ContradictionError("degree validation of the counterexample field failed");
  std::vector<Integer> ms = m_values;
  std::sort(ms.begin(), ms.end());
  Deg8Report rep;
  lattice::Tolerances tol{cfg.verdict_band};
  rep.orders_ok = true;
  for (const auto& M : ms) {
    if (M < 1) throw InvalidInput("M must be a positive integer");
    Flag basis = lattice::counterexample_deg8_basis(K, Rational(M));
    Deg8Row row;
    row.M = M;
    row.is_order = lattice::is_order(basis, K);
    rep.orders_ok = rep.orders_ok && row.is_order;
    if (!row.is_order) {
      rep.rows.push_back(row);
      continue;
    }
    OrderBasis O(K, basis.basis());
    MinimaResult m = lattice::successive_minima(O, cfg.precision);
    PrecisionScope scope(m.precision);
    row.discriminant = lattice::discriminant(O);
    row.lambdas = m.lambdas;
    row.ratio = m.lambdas[3].mid * m.lambdas[3].mid / m.lambdas[6].mid;
    row.tower = lattice::order_tower_type(O, m);
    row.minkowski_type = lattice::minkowski_type(O, m);
    row.check_336 = lattice::check_inequality(m, m, 8, 3, 3, 6, tol);
    rep.rows.push_back(row);
  }
  if (!rep.orders_ok) return rep;

  PrecisionScope scope(cfg.precision);
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  const Real k(static_cast<long>(rep.rows.size()));
  for (const auto& r : rep.rows) {
    Real x = bmp::log(to_real(r.M)), y = bmp::log(r.ratio);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  rep.slope_ok = bmp::abs(rep.slope + 2) <= Real(2 * cfg.slope_band);

  const auto& last = rep.rows.back();
  rep.tower_ok = last.tower == radix::TowerType({8});
  const int target[7] = {4, 5, 5, 8, 8, 12, 12};
  Real err = 0;
  for (int i = 0; i < 7; ++i)
    err = std::max(err, bmp::abs(last.minkowski_type[static_cast<std::size_t>(i)] - Real(target[i]) / 108));
  rep.type_error = static_cast<double>(err.convert_to<long double>());
  rep.type_ok = rep.type_error <= cfg.type_band;
  return rep;
}

SuiteResult counterexample(const Config& cfg) {
  Recorder rec("degree-8 counterexample");
  auto ms = default_deg8_m_values();
  Deg8Report rep = counterexample_deg8(ms, cfg);
  rec.check(rep.orders_ok, [] { return std::string("some O_M is not an order"); });
  rec.check(rep.slope_ok, [&] { return "slope " + fmt(rep.slope, 6) + " not within band of -2"; });
  rec.check(rep.tower_ok, [&] { return "tower type at the largest M is " + rep.rows.back().tower.to_string(); });
  rec.check(rep.type_ok, [&] { return "Minkowski type off by " + std::to_string(rep.type_error); });
  bool fails_large = rep.orders_ok && rep.rows.back().check_336.verdict == lattice::Verdict::Fails;
  rec.check(fails_large, [] { return std::string("lambda_6 <= sqrt(8) lambda_3^2 not refuted at the largest M"); });
  return rec.finish("M = " + to_string(ms.front()) + ".." + to_string(ms.back()) + ", slope " + fmt(rep.slope, 6) +
                    ", type error " + std::to_string(rep.type_error));
}

SuiteResult polytope_identities(const Config&, int max_n) {
  Recorder rec("flag polytope identities");
  int towers = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& t : radix::tower_types(n)) {
      ++towers;
      auto tc = nfield::radical_tower_construction(t);
      auto T = nfield::flag_type(tc.flag, tc.field);
      auto P = geometry::flag_polytope(T);
      auto L = geometry::lenstra_polytope(t);
      rec.check(geometry::union_contains(P, {L}).contained, [&] { return "P_T not inside Len " + t.to_string(); });
      rec.check(geometry::union_contains(L, {P}).contained, [&] { return "Len not inside P_T " + t.to_string(); });
      auto cs = nfield::corners(T);
      for (int i = 1; i < n; ++i) {
        for (int j = i; i + j < n; ++j) {
          bool corner = std::find(cs.begin(), cs.end(), std::make_pair(i, j)) != cs.end();
          bool addable = !radix::overflows(i, j, t);
          bool facet = geometry::is_facet(L, geometry::sum_constraint(n - 1, i + j, i, j));
          auto where = [&] { return t.to_string() + " (" + std::to_string(i) + "," + std::to_string(j) + ")"; };
          rec.check(corner == addable && addable == (T(i, j) == i + j), [&] { return "corner/overflow " + where(); });
          rec.check(facet == corner, [&] { return "facet/corner " + where(); });
        }
      }
    }
  }
  return rec.finish(std::to_string(towers) + " tower types of degree <= " + std::to_string(max_n));
}

SuiteResult spectrum_deg8(const Config&) {
  Recorder rec("degree-8 spectrum geometry");
  VectorQ x(7);
  x << Rational(4, 108), Rational(5, 108), Rational(5, 108), Rational(8, 108), Rational(8, 108), Rational(12, 108),
      Rational(12, 108);
  auto l8 = geometry::lenstra_polytope(radix::TowerType({8}));
  auto l24 = geometry::lenstra_polytope(radix::TowerType({2, 4}));
  rec.check(!geometry::contains(l8, x), [] { return std::string("point lies in Len(8)"); });
  rec.check(geometry::contains(l24, x), [] { return std::string("point misses Len(2,4)"); });
  auto r = geometry::union_contains(l24, {l8});
  rec.check(!r.contained && r.witness.has_value(), [] { return std::string("Len(2,4) reported inside Len(8)"); });
  if (r.witness) {
    rec.check(geometry::contains(l24, *r.witness) && !geometry::contains(l8, *r.witness),
              [] { return std::string("witness does not separate"); });
  }
  return rec.finish("union_contains used " + std::to_string(r.cells) + " cells");
}

SuiteResult family_convergence(const Config& cfg) {
  Recorder rec("family convergence");
  struct Spec {
    std::string label;
    lattice::FamilySpec spec;
  };
  std::vector<Spec> specs;
  for (auto [n, p] : {std::pair{4, 2L}, std::pair{5, 2L}, std::pair{6, 3L}}) {
    NumberField K(radical_poly(n, p));
    VectorQ x(n - 1);
    for (int i = 1; i < n; ++i) x(i - 1) = Rational(i, n * (n - 1));
    specs.push_back({"x^" + std::to_string(n) + "-" + std::to_string(p) + ", x_i = i/(n(n-1))", {K, power_flag(K), x}});
  }
  {
    NumberField K = lattice::counterexample_deg8_field();
    VectorQ x(7);
    x << Rational(4, 108), Rational(5, 108), Rational(5, 108), Rational(8, 108), Rational(8, 108), Rational(12, 108),
        Rational(12, 108);
    specs.push_back({"degree-8 counterexample", {K, lattice::counterexample_deg8_basis(K, Rational(1)), x}});
  }
  std::string detail;
  for (const auto& s : specs) {
    lattice::validate_family(s.spec);
    auto rule = lattice::m_rule(s.spec);
    // scales with log M close to 60, 120 and 250
    std::vector<Integer> ms;
    for (double target : {60.0, 120.0, 250.0}) {
      Integer scale(static_cast<long>(std::ceil(std::exp(target / static_cast<double>(rule.d)))));
      scale = ((scale + rule.L - 1) / rule.L) * rule.L;
      ms.push_back(bmp::pow(scale, static_cast<unsigned>(rule.d)));
    }
    auto members = lattice::family_construct(s.spec, ms);
    double last_err = 0;
    for (const auto& mem : members) {
      auto mt = lattice::minkowski_type(mem.order, cfg.precision);
      PrecisionScope scope(cfg.precision);
      Real err = 0;
      for (Index i = 0; i < s.spec.x.size(); ++i)
        err = std::max(err, bmp::abs(mt[static_cast<std::size_t>(i)] - to_real(s.spec.x(i))));
      last_err = static_cast<double>(err.convert_to<long double>());
    }
    rec.check(last_err < cfg.family_band, [&] { return s.label + ": error " + std::to_string(last_err); });
    std::ostringstream os;
    os << s.label << " err " << last_err << "; ";
    detail += os.str();
  }
  detail.resize(detail.size() - 2);
  return rec.finish(std::to_string(specs.size()) + " specs: " + detail);
}

SuiteResult minima_oracle(const Config& cfg) {
  Recorder rec("enumeration vs brute force");
  std::mt19937_64 rng(cfg.seed + 3);
  std::vector<poly::PolyZ> polys;
  auto P = [](std::vector<long> c) {
    poly::PolyZ f;
    for (long v : c) f.emplace_back(v);
    return f;
  };
  polys = {P({1, 0, 1}), P({-2, 0, 1}), P({1, 1, 1}), P({-5, 0, 1}),        P({-2, 0, 0, 1}),
           P({1, -3, 0, 1}), P({1, 1, 0, 1}), P({1, 0, -10, 0, 1}), P({-2, 0, 0, 0, 1}), P({1, 1, 0, 0, 1})};
  int lattices = 0;
  for (const auto& f : polys) {
    NumberField K(f);
    const int n = K.degree();
    std::vector<std::vector<FieldElement>> bases;
    bases.push_back(lattice::equation_order(K).elements());
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 4; ++trial) {
      MatrixQ t(n, n);
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) t(i, j) = d(rng) + (i == j ? 1 : 0);
      } while (exact::rank(t) < n);
      std::vector<FieldElement> b;
      for (int j = 0; j < n; ++j) b.push_back({t.col(j)});
      bases.push_back(b);
    }
    for (const auto& b : bases) {
      ++lattices;
      MinimaResult m = lattice::successive_minima(lattice::t2_gram(std::span<const FieldElement>(b), K, cfg.precision));
      Eigen::MatrixXd g = double_gram(b, K);
      auto expected = brute_force_minima(g);
      rec.check(expected.size() == m.lambdas.size(), [&] { return "rank mismatch for " + poly_label(f); });
      for (std::size_t i = 0; i < std::min(expected.size(), m.lambdas.size()); ++i) {
        double got = m.lambdas[i].mid.convert_to<double>();
        rec.check(std::abs(got - expected[i]) <= cfg.value_tol * std::max(1.0, expected[i]), [&] {
          return poly_label(f) + " lambda_" + std::to_string(i) + ": " + std::to_string(got) + " vs " +
                 std::to_string(expected[i]);
        });
        // the witness has the reported length in the oracle's own Gram matrix
        Eigen::VectorXd c(n);
        for (int k = 0; k < n; ++k) c(k) = m.coefficients[i](k).convert_to<double>();
        double len = std::sqrt(c.dot(g * c));
        rec.check(std::abs(len - got) <= cfg.value_tol * std::max(1.0, got), [&] { return "witness length mismatch"; });
      }
    }
  }
  return rec.finish(std::to_string(lattices) + " lattices of rank 2..4");
}

SuiteResult scrollar(const Config&, int max_n, long max_g) {
  Recorder rec("scrollar suite");
  using scrollar::SplittingType;
  std::size_t types = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (long g = 0; g <= max_g; ++g) {
      if (n == 1 && g > 0) continue;
      std::vector<long> a(static_cast<std::size_t>(n), 0);
      std::function<void(int, long, long)> walk = [&](int i, long lo, long left) {
        if (i == n) {
          if (left != 0) return;
          ++types;
          for (long c : {0L, -1L, 2L}) {
            SplittingType s{n, g, -static_cast<long>(n) * c, a};
            for (auto& v : s.a) v += c;
            auto h = scrollar::h0_table(s, s.a.front() - 1, s.a.back());
            rec.check(scrollar::minima_from_h0(h, n) == s.a, [&] { return "round trip n=" + std::to_string(n); });
          }
          if (types % 97 == 0) {
            SplittingType bad{n, g, 0, a};
            bad.a.back() += 1;
            bool threw = false;
            try {
              scrollar::validate(bad);
            } catch (const InvalidInput&) {
              threw = true;
            }
            rec.check(threw, [&] { return std::string("sum rule not enforced"); });
          }
          return;
        }
        for (long v = lo; v * (n - i) <= left; ++v) {
          a[static_cast<std::size_t>(i)] = v;
          walk(i + 1, v, left - v);
        }
      };
      if (n == 1)
        walk(1, 0, 0);
      else
        walk(1, 0, g + n - 1);
    }
  }
  auto S = [](int n, long g, std::vector<long> a) { return SplittingType{n, g, 0, std::move(a)}; };
  rec.check(scrollar::maroni_check(S(2, 1, {0, 2})), [] { return std::string("maroni (0,2)"); });
  rec.check(scrollar::maroni_check(S(4, 9, {0, 4, 4, 4})), [] { return std::string("maroni balanced"); });
  rec.check(!scrollar::maroni_check(S(3, 20, {0, 0, 22})), [] { return std::string("maroni concentrated"); });
  rec.check(scrollar::dp_bounds_check(S(3, 4, {0, 3, 3})), [] { return std::string("dp (0,3,3)"); });
  rec.check(!scrollar::dp_bounds_check(S(3, 4, {0, 1, 5})), [] { return std::string("dp (0,1,5)"); });
  rec.check(!scrollar::dp_bounds_check(S(3, 1, {0, 0, 3})), [] { return std::string("dp (0,0,3)"); });
  rec.check(scrollar::dp_bounds_check(S(2, 1, {0, 2})), [] { return std::string("dp (0,2)"); });
  return rec.finish(std::to_string(types) + " structure-sheaf types with n <= " + std::to_string(max_n) +
                    ", g <= " + std::to_string(max_g) + ", three twists each");
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"radix", "lambda0", "submult", "minkowski", "exthm", "counterexample",
          "polytope", "spectrum", "family", "oracle", "scrollar"};
}

SuiteResult run_suite(const std::string& name, const Config& cfg) {
  if (name == "radix") return overflow_residue(cfg);
  if (name == "lambda0") return lambda_zero(cfg);
  if (name == "submult") return submultiplicativity(cfg);
  if (name == "minkowski") return minkowski(cfg);
  if (name == "exthm") return exthm(cfg);
  if (name == "counterexample") return counterexample(cfg);
  if (name == "polytope") return polytope_identities(cfg);
  if (name == "spectrum") return spectrum_deg8(cfg);
  if (name == "family") return family_convergence(cfg);
  if (name == "oracle") return minima_oracle(cfg);
  if (name == "scrollar") return scrollar(cfg);
  throw InvalidInput("unknown suite \"" + name + "\"");
}

}  // namespace succmin::suites
