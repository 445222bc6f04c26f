#include <doctest.h>

#include "succmin/lattice.hpp"
#include "succmin/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

using namespace succmin;
using namespace succmin::lattice;

namespace {

poly::PolyZ P(std::vector<long> c) {
  poly::PolyZ f;
  for (long x : c) f.push_back(Integer(x));
  return f;
}

FieldElement E(std::vector<Rational> c) {
  VectorQ v(static_cast<Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Index>(i)) = c[i];
  return {v};
}

// Embeddings from the eigenvalues of the companion matrix in double.
Eigen::MatrixXd double_gram(const std::vector<FieldElement>& basis, const NumberField& K) {
  const int n = K.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -K.min_poly()[static_cast<std::size_t>(i)].convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  auto roots = es.eigenvalues();
  const Index m = static_cast<Index>(basis.size());
  std::vector<std::vector<std::complex<double>>> sig(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    for (int r = 0; r < n; ++r) {
      std::complex<double> v = 0, p = 1;
      for (int k = 0; k < n; ++k) {
        v += basis[static_cast<std::size_t>(i)].coeffs(k).convert_to<double>() * p;
        p *= roots(r);
      }
      sig[static_cast<std::size_t>(i)].push_back(v);
    }
  }
  Eigen::MatrixXd g(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      double s = 0;
      for (int r = 0; r < n; ++r)
        s += std::real(sig[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                       std::conj(sig[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]));
      g(i, j) = s / n;
    }
  return g;
}

// Successive minima by exhaustive search over the coefficient box that
// contains every vector of squared norm <= R2. R2 must be at least the last
// squared minimum.
std::vector<double> minima_oracle(const Eigen::MatrixXd& g, double R2) {
  const Index n = g.rows();
  Eigen::MatrixXd ginv = g.inverse();
  std::vector<long> box(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) box[static_cast<std::size_t>(i)] = static_cast<long>(std::floor(std::sqrt(R2 * ginv(i, i)) + 1e-9));
  std::vector<std::pair<double, std::vector<long>>> pts;
  std::vector<long> c(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = -box[static_cast<std::size_t>(i)];
  while (true) {
    Eigen::VectorXd v(n);
    bool zero = true;
    for (Index i = 0; i < n; ++i) {
      v(i) = static_cast<double>(c[static_cast<std::size_t>(i)]);
      zero = zero && c[static_cast<std::size_t>(i)] == 0;
    }
    double q = v.dot(g * v);
    if (!zero && q <= R2 * (1 + 1e-9)) pts.emplace_back(q, c);
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

void check_against_oracle(const std::vector<FieldElement>& basis, const NumberField& K) {
  EmbeddingData data = t2_gram(std::span<const FieldElement>(basis), K, 128);
  MinimaResult m = successive_minima(data);
  // the witnesses certify lambda_n <= the last reported norm
  double last = m.lambdas.back().mid.convert_to<double>();
  auto expected = minima_oracle(double_gram(basis, K), last * last * (1 + 1e-9));
  REQUIRE(expected.size() == m.lambdas.size());
  exact::SpanBuilder span(K.degree());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    double got = m.lambdas[i].mid.convert_to<double>();
    CHECK(got == doctest::Approx(expected[i]).epsilon(1e-9));
    CHECK(span.add(m.witnesses[i].coeffs));
    // the witness really is the coefficient combination
    FieldElement x = K.zero();
    for (Index k = 0; k < m.coefficients[i].size(); ++k)
      x = x + Rational(m.coefficients[i](k)) * basis[static_cast<std::size_t>(k)];
    CHECK(x == m.witnesses[i]);
    if (i > 0) CHECK(m.lambdas[i - 1].lower() <= m.lambdas[i].upper());
  }
}

}  // namespace

TEST_CASE("order and discriminant basics") {
  NumberField qi(P({1, 0, 1}));
  NumberField q2(P({-2, 0, 1}));
  CHECK(discriminant(equation_order(qi)) == 4);
  CHECK(discriminant(equation_order(q2)) == 8);
  CHECK(is_order(Flag({q2.one(), E({0, 2})}, q2), q2));
  CHECK_FALSE(is_order(Flag({q2.one(), E({0, Rational(1, 2)})}, q2), q2));
  CHECK_THROWS_AS(OrderBasis(q2, {q2.one(), E({0, Rational(1, 2)})}), InvalidInput);

  // golden ratio order Z[(1+sqrt5)/2]
  NumberField q5(P({-5, 0, 1}));
  OrderBasis golden(q5, {q5.one(), E({Rational(1, 2), Rational(1, 2)})});
  CHECK(discriminant(golden) == 5);

  auto pi = structure_constants(golden.flag(), q5);
  // phi^2 = 1 + phi
  CHECK(pi[0](1, 1) == 1);
  CHECK(pi[1](1, 1) == 1);
}

TEST_CASE("fractional ideals") {
  NumberField qi(P({1, 0, 1}));
  OrderBasis zi = equation_order(qi);
  std::vector<FieldElement> gen{E({1, 1})};
  IdealBasis I = ideal_from_generators(zi, gen);
  // N(1+i) = 2 so the discriminant grows by 2^2
  CHECK(discriminant(std::span<const FieldElement>(I.elements()), qi) == 16);
  CHECK(is_fractional_ideal(I.elements(), zi));
  CHECK_FALSE(is_fractional_ideal(std::vector<FieldElement>{E({1, 0}), E({0, 2})}, zi));
  CHECK_THROWS_AS(IdealBasis(zi, {E({1, 0}), E({0, 2})}), InvalidInput);
  MinimaResult m = successive_minima(I);
  CHECK(m.lambdas[0].mid.convert_to<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.lambdas[1].mid.convert_to<double>() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("minima of small orders") {
  NumberField qi(P({1, 0, 1}));
  MinimaResult m = successive_minima(equation_order(qi));
  CHECK(m.lambdas[0].mid == 1);
  CHECK(bmp::abs(m.lambdas[1].mid - 1) <= m.lambdas[1].rad);
  // tie between 1 and i goes to 1
  CHECK(m.witnesses[0] == qi.one());
  CHECK(m.witnesses[1] == E({0, 1}));
  CHECK(order_tower_type(equation_order(qi), m) == radix::TowerType({2}));

  NumberField q2(P({-2, 0, 1}));
  MinimaResult r = successive_minima(equation_order(q2));
  PrecisionScope scope(r.precision);
  Real s2 = bmp::sqrt(Real(2));
  CHECK(bmp::abs(r.lambdas[1].mid - s2) <= r.lambdas[1].rad);
  CHECK(r.lambdas[1].rad < Real(1e-30));
  CHECK(r.lambdas[1].lower() <= s2);
  CHECK(s2 <= r.lambdas[1].upper());
}

TEST_CASE("minima agree with exhaustive search") {
  std::mt19937 rng(7);
  std::vector<poly::PolyZ> polys{P({1, -3, 0, 1}), P({-2, 0, 0, 1}), P({1, 0, -10, 0, 1}), P({3, 1, 0, 0, 1}),
                                 P({-2, 0, 0, 0, 0, 1})};
  for (const auto& f : polys) {
    NumberField K(f);
    const int n = K.degree();
    for (int trial = 0; trial < 4; ++trial) {
      std::uniform_int_distribution<int> d(n <= 3 ? -2 : -1, n <= 3 ? 2 : 1);
      MatrixQ t(n, n);
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) t(i, j) = d(rng) + (i == j ? 1 : 0);
      } while (exact::rank(t) < n);
      std::vector<FieldElement> basis;
      for (int j = 0; j < n; ++j) basis.push_back({t.col(j)});
      check_against_oracle(basis, K);
    }
    check_against_oracle(equation_order(K).elements(), K);
  }
}

TEST_CASE("skewed lattices") {
  NumberField K(P({1, -3, 0, 1}));
  for (long M : {10L, 1000L, 100000L}) {
    Rational q(M);
    std::vector<FieldElement> basis{K.one(), q * E({0, 1, 0}), q * q * E({0, 0, 1})};
    MinimaResult m = successive_minima(OrderBasis(K, basis));
    CHECK(m.lambdas[0].mid == 1);
    std::vector<double> norms;
    for (const auto& b : basis) norms.push_back(t2_norm(b, K, isolate_roots(K.min_poly(), 128)).mid.convert_to<double>());
    // the reduced minima are never longer than the basis
    CHECK(m.lambdas[2].mid.convert_to<double>() <= norms[2] * (1 + 1e-12));
  }
  // a unimodular image of Z[theta] that LLL must untangle
  std::vector<FieldElement> basis{K.one(), E({1000, 1, 0}), E({7, 3000, 1})};
  MinimaResult skew = successive_minima(t2_gram(std::span<const FieldElement>(basis), K, 128));
  MinimaResult plain = successive_minima(equation_order(K));
  for (std::size_t i = 0; i < 3; ++i) CHECK(bmp::abs(skew.lambdas[i].mid - plain.lambdas[i].mid) <= skew.lambdas[i].rad + plain.lambdas[i].rad);
}

TEST_CASE("node budget") {
  NumberField K(P({-2, 0, 0, 0, 0, 1}));
  MinimaOptions tight;
  tight.node_budget = 2;
  CHECK_THROWS_AS(successive_minima(t2_gram(equation_order(K).flag(), K, 128), tight), ResourceLimit);
  CHECK_THROWS_AS(t2_gram(equation_order(K).flag(), K, 32), InvalidInput);
}

TEST_CASE("counterexample basis") {
  NumberField K = counterexample_deg8_field();
  for (long M : {1L, 2L, 3L}) {
    Flag b = counterexample_deg8_basis(K, Rational(M));
    CHECK(is_order(b, K));
    CHECK(discriminant(std::span<const FieldElement>(b.basis()), K) ==
          Rational(bmp::pow(Integer(M), 108) * bmp::pow(Integer(2), 31)));
  }
  CHECK_FALSE(is_order(counterexample_deg8_basis(K, Rational(1, 2)), K));

  OrderBasis O(K, counterexample_deg8_basis(K, Rational(2)).basis());
  MinimaResult m = successive_minima(O);
  // power basis of x^8 - 2 is orthogonal, so minima are the sorted norms
  const double theta = std::pow(2.0, 1.0 / 8);
  const int power[8] = {0, 1, 4, 5, 2, 6, 3, 7};
  const int expo[8] = {0, 4, 5, 5, 8, 8, 12, 12};
  std::vector<double> norms;
  for (int i = 0; i < 8; ++i) norms.push_back(std::pow(2.0, expo[i]) * std::pow(theta, power[i]));
  std::sort(norms.begin(), norms.end());
  for (int i = 0; i < 8; ++i) CHECK(m.lambdas[static_cast<std::size_t>(i)].mid.convert_to<double>() == doctest::Approx(norms[static_cast<std::size_t>(i)]));
  CHECK(order_tower_type(O, m) == radix::TowerType({8}));
}

TEST_CASE("inequality verdicts") {
  NumberField qi(P({1, 0, 1}));
  OrderBasis zi = equation_order(qi);
  MinimaResult m = successive_minima(zi);
  auto c = check_inequality(m, m, 2, 1, 1, 1);
  CHECK(c.verdict == Verdict::Holds);
  CHECK_THROWS_AS(check_inequality(m, m, 2, 0, 0, 2), RangeError);

  // synthetic minima to exercise each verdict
  MinimaResult a;
  a.precision = 128;
  PrecisionScope scope(128);
  a.lambdas = {Certified{Real(1), Real(0)}, Certified{Real(10), Real(0)}};
  CHECK(check_inequality(a, a, 2, 0, 0, 1).verdict == Verdict::Fails);
  a.lambdas[1] = Certified{bmp::sqrt(Real(2)), Real(1e-20)};
  CHECK(check_inequality(a, a, 2, 0, 0, 1).verdict == Verdict::Inconclusive);
  a.lambdas[1] = Certified{Real(1), Real(1e-20)};
  CHECK(check_inequality(a, a, 2, 0, 0, 1).verdict == Verdict::Holds);
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
}

TEST_CASE("inbound witnesses and bounds on random orders") {
  std::vector<poly::PolyZ> polys{P({1, -3, 0, 1}), P({-2, 0, 0, 1}), P({1, 0, -10, 0, 1}), P({3, 1, 0, 0, 1})};
  for (const auto& f : polys) {
    NumberField K(f);
    OrderBasis O = equation_order(K);
    MinimaResult m = successive_minima(O);
    auto s = minkowski_sandwich(O, m);
    CHECK(s.holds);
    CHECK(s.lower <= s.middle);
    CHECK(s.middle <= s.upper);
    auto pb = primitive_bounds_check(O);
    CHECK(pb.lower_holds);
    CHECK(pb.upper_holds);
    std::vector<FieldElement> gen{E(std::vector<Rational>(static_cast<std::size_t>(K.degree()), Rational(1)))};
    IdealBasis I = ideal_from_generators(O, gen);
    for (int i = 0; i < K.degree(); ++i) {
      for (int j = 0; j < K.degree(); ++j) {
        auto ws = inbound_witness(O, I, i, j);
        CHECK_FALSE(ws.empty());
        for (const auto& w : ws) CHECK(w.check.verdict != Verdict::Fails);
      }
    }
  }
}

TEST_CASE("families") {
  NumberField K(P({-2, 0, 0, 0, 1}));
  Flag seed({K.one(), E({0, 1, 0, 0}), E({0, 0, 1, 0}), E({0, 0, 0, 1})}, K);
  // sum x = 1/2, inside the power-basis polytope
  VectorQ x(3);
  x << Rational(1, 12), Rational(2, 12), Rational(3, 12);
  FamilySpec spec{K, seed, x};
  MRule rule = m_rule(spec);
  CHECK(rule.d == 12);
  CHECK(rule.L == 1);
  auto members = family_construct(spec, 3);
  REQUIRE(members.size() == 3);
  CHECK(members[1].M == bmp::pow(Integer(2), 12));
  for (const auto& mem : members) CHECK(discriminant(mem.order) == discriminant(equation_order(K)) * Rational(mem.M));

  auto explicit_members = family_construct(spec, std::vector<Integer>{Integer(4096), Integer(1)});
  CHECK(explicit_members[0].M == 1);
  CHECK(explicit_members[1].scale == 2);
  CHECK_THROWS_AS(family_construct(spec, std::vector<Integer>{Integer(5)}), ConstructionError);

  VectorQ outside(3);
  outside << Rational(1, 2), 0, 0;
  CHECK_THROWS_AS(validate_family(FamilySpec{K, seed, outside}), ConstructionError);

  // Minkowski type tracks x as M grows
  auto mt = minkowski_type(members[2].order);
  CHECK(mt.size() == 3);
}

TEST_CASE("totally real Gram entries are traces") {
  NumberField K(P({1, -3, 0, 1}));
  std::vector<FieldElement> b{K.one(), E({0, 1, 0}), E({Rational(1, 2), 0, Rational(1, 2)})};
  EmbeddingData d = t2_gram(std::span<const FieldElement>(b), K, 128);
  PrecisionScope scope(d.precision);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Real exact = to_real(K.trace(K.multiply(b[i], b[j])) / 3);
      const auto ii = static_cast<Index>(i), jj = static_cast<Index>(j);
      CHECK(bmp::abs(d.gram(ii, jj) - exact) <= d.gram_error(ii, jj) + Real(1e-35));
    }
  }
}

TEST_CASE("quadratic families scale the second minimum") {
  for (long dsq : {2L, 3L, 5L}) {
    NumberField K(P({-dsq, 0, 1}));
    VectorQ x(1);
    x << Rational(1, 2);
    FamilySpec spec{K, Flag({K.one(), E({0, 1})}, K), x};
    CHECK(m_rule(spec).d == 2);
    for (const auto& mem : family_construct(spec, 4)) {
      const Integer t = mem.scale;
      CHECK(mem.M == t * t);
      CHECK(discriminant(mem.order) == Rational(4 * dsq * mem.M));
      MinimaResult m = successive_minima(mem.order);
      PrecisionScope scope(m.precision);
      CHECK(bmp::abs(m.lambdas[1].mid - to_real(t) * bmp::sqrt(Real(dsq))) < Real(1e-30));
    }
  }
}

TEST_CASE("degree-8 family breaks the (3,3,6) inequality only for large M") {
  NumberField K = counterexample_deg8_field();
  OrderBasis small(K, counterexample_deg8_basis(K, Rational(1)).basis());
  OrderBasis large(K, counterexample_deg8_basis(K, Rational(100)).basis());
  CHECK(check_inequality(small, std::nullopt, 3, 3, 6).verdict == Verdict::Holds);
  CHECK(check_inequality(large, std::nullopt, 3, 3, 6).verdict == Verdict::Fails);

  // minima spread over ~100 orders of magnitude must not inflate the tie band
  OrderBasis huge(K, counterexample_deg8_basis(K, Rational(10000)).basis());
  MinimaResult m = successive_minima(huge);
  CHECK(m.nodes < 1000);
  PrecisionScope scope(m.precision);
  Real expected = bmp::pow(Real(10000), 12) * bmp::pow(Real(2), Real(7) / 8);
  CHECK(bmp::abs(m.lambdas[7].mid / expected - 1) < Real(1e-30));
}
