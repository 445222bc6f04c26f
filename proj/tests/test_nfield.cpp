#include <doctest.h>

#include "succmin/linalg.hpp"
#include "succmin/nfield.hpp"

#include <random>

using namespace succmin;
using namespace succmin::nfield;

namespace {

NumberField field_of(std::vector<long> coeffs) {
  poly::PolyZ f;
  for (long c : coeffs) f.emplace_back(c);
  return NumberField(f);
}

FieldElement elem(const NumberField& k, std::vector<Rational> c) {
  VectorQ v = VectorQ::Zero(k.degree());
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Index>(i)) = c[i];
  return k.element(v);
}

// T(i,j) straight from the definition: least k with all v_a v_b (a <= i,
// b <= j) in span(v_0..v_k), by exact rank comparison.
Eigen::MatrixXi flag_type_oracle(const Flag& f, const NumberField& k) {
  const int n = f.size();
  Eigen::MatrixXi t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c < n; ++c) {
        MatrixQ span(n, c + 1);
        for (int m = 0; m <= c; ++m) span.col(m) = f[m].coeffs;
        Index base = exact::rank(span);
        bool ok = true;
        for (int a = 0; a <= i && ok; ++a) {
          for (int b = 0; b <= j && ok; ++b) {
            MatrixQ ext(n, c + 2);
            ext << span, k.multiply(f[a], f[b]).coeffs;
            ok = exact::rank(ext) == base;
          }
        }
        if (ok) {
          t(i, j) = c;
          break;
        }
      }
    }
  }
  return t;
}

Flag random_flag(std::mt19937& rng, const NumberField& k) {
  std::uniform_int_distribution<int> d(-3, 3);
  const int n = k.degree();
  while (true) {
    std::vector<FieldElement> b{k.one()};
    for (int i = 1; i < n; ++i) {
      VectorQ v(n);
      for (int m = 0; m < n; ++m) v(m) = Rational(d(rng), 1 + (d(rng) + 3) % 2);
      b.push_back(k.element(v));
    }
    try {
      return Flag(b, k);
    } catch (const InvalidFlag&) {
    }
  }
}

}  // namespace

TEST_CASE("field arithmetic") {
  auto q2 = field_of({-2, 0, 1});
  auto x = q2.power_of_generator(1);
  CHECK(element_mul(x, x, q2) == q2.rational(2));
  CHECK(element_mul(q2.one(), x, q2) == x);
  auto k4 = field_of({-2, 0, 0, 0, 1});
  CHECK(element_mul(k4.power_of_generator(2), k4.power_of_generator(3), k4) == elem(k4, {0, 2}));
  CHECK(k4.power_of_generator(9) == elem(k4, {0, 4}));
  auto a = elem(k4, {1, 2, Rational(1, 3), -1});
  CHECK(k4.multiply(a, k4.inverse(a)) == k4.one());
  CHECK(k4.trace(k4.one()) == 4);
  CHECK(k4.trace(k4.power_of_generator(4)) == 8);
  CHECK(k4.trace(k4.power_of_generator(1)) == 0);
  CHECK_THROWS_AS(k4.inverse(k4.zero()), InvalidInput);
  CHECK_THROWS_AS(field_of({1, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(field_of({1, 2}), InvalidInput);
  CHECK_THROWS_AS(field_of({1, 0, 2}), InvalidInput);
  CHECK(k4.irreducibility() == poly::Irreducibility::Certified);
}

TEST_CASE("element degrees") {
  auto k4 = field_of({-2, 0, 0, 0, 1});
  CHECK(element_degree(k4.rational(Rational(5, 7)), k4) == 1);
  CHECK(element_degree(k4.power_of_generator(1), k4) == 4);
  CHECK(element_degree(k4.power_of_generator(2), k4) == 2);
  auto k8 = field_of({-2, 0, 0, 0, 0, 0, 0, 0, 1});
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    VectorQ v = VectorQ::Zero(8);
    for (int m = 0; m < 8; m += 1 + trial % 4) v(m) = d(rng);
    int deg = element_degree(k8.element(v), k8);
    CHECK(8 % deg == 0);
  }
  FieldElement sq[] = {k8.power_of_generator(4), k8.power_of_generator(2)};
  CHECK(generated_degree(sq, k8) == 4);
}

TEST_CASE("flags and flag types") {
  auto k4 = field_of({-2, 0, 0, 0, 1});
  CHECK_THROWS_AS(Flag({k4.power_of_generator(1), k4.one(), k4.power_of_generator(2), k4.power_of_generator(3)}, k4),
                  InvalidFlag);
  CHECK_THROWS_AS(Flag({k4.one(), k4.power_of_generator(1), k4.power_of_generator(1), k4.power_of_generator(3)}, k4),
                  InvalidFlag);
  CHECK_THROWS_AS(Flag({k4.one(), k4.power_of_generator(1)}, k4), InvalidFlag);

  Flag f({k4.one(), k4.power_of_generator(2), k4.power_of_generator(1), k4.power_of_generator(3)}, k4);
  FlagType t = flag_type(f, k4);
  CHECK(t.table() == flag_type_oracle(f, k4));
  CHECK(tower_type_of_basis(f, k4) == radix::TowerType({2, 2}));
  Eigen::MatrixXi expected(4, 4);
  expected << 0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3;
  CHECK(t.table() == expected);
  // corners of the (2,2) lexicographic flag are the digit-wise addable pairs
  auto cs = corners(t);
  CHECK(cs == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});

  Flag power({k4.one(), k4.power_of_generator(1), k4.power_of_generator(2), k4.power_of_generator(3)}, k4);
  CHECK(tower_type_of_basis(power, k4) == radix::TowerType({4}));

  std::mt19937 rng(17);
  for (auto coeffs : std::vector<std::vector<long>>{{-2, 0, 0, 1}, {-2, 0, 0, 0, 1}, {-1, -1, 0, 0, 0, 1},
                                                    {-2, 0, 0, 0, 0, 0, 1}, {1, 0, -10, 0, 1}}) {
    auto k = field_of(coeffs);
    for (int trial = 0; trial < 6; ++trial) {
      Flag g = random_flag(rng, k);
      FlagType tg = flag_type(g, k);
      CHECK(FlagType::satisfies_axioms(tg.table()));
      CHECK(tg.table() == flag_type_oracle(g, k));
      for (auto [i, j] : corners(tg)) CHECK(tg(i, j) >= i + j);
    }
  }
  Eigen::MatrixXi bad(2, 2);
  bad << 0, 1, 0, 1;
  CHECK_THROWS_AS(FlagType{bad}, InvalidInput);
}

TEST_CASE("lexicographic bases realize the explicit flag type") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& tower : radix::tower_types(n)) {
      auto tc = radical_tower_construction(tower);
      CHECK(tower_type_of_basis(tc.flag, tc.field) == tower);
      FlagType t = flag_type(tc.flag, tc.field);
      auto cs = corners(t);
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          bool corner = std::find(cs.begin(), cs.end(), std::make_pair(i, j)) != cs.end();
          if (i + j < n) {
            bool ok = !radix::overflows(i, j, tower);
            CHECK(corner == ok);
            CHECK((t(i, j) == i + j) == ok);
          } else {
            CHECK_FALSE(corner);
          }
        }
      }
    }
  }
  auto k4 = field_of({-2, 0, 0, 0, 1});
  FieldElement bad[] = {k4.power_of_generator(1)};
  CHECK_THROWS_AS(lexicographic_basis(radix::TowerType({2, 2}), bad, k4), InvalidInput);
}

TEST_CASE("primitive combinations") {
  auto k4 = field_of({1, 0, -10, 0, 1});  // Q(sqrt2 + sqrt3), generator s
  // sqrt2 = (s^3 - 9 s)/2, sqrt3 = (11 s - s^3)/2
  auto s2 = elem(k4, {0, Rational(-9, 2), 0, Rational(1, 2)});
  auto s3 = elem(k4, {0, Rational(11, 2), 0, Rational(-1, 2)});
  CHECK(k4.multiply(s2, s2) == k4.rational(2));
  CHECK(k4.multiply(s3, s3) == k4.rational(3));
  FieldElement both[] = {s2, s3};
  auto pc = primitive_combination(both, k4);
  CHECK(element_degree(pc.generator, k4) == 4);
  for (const auto& a : pc.coefficients) {
    CHECK(a != 0);
    CHECK(bmp::abs(a) <= 12);
  }
  CHECK(pc.coefficients == std::vector<Integer>{1, 1});

  FieldElement single[] = {s2};
  auto one = primitive_combination(single, k4);
  CHECK(one.coefficients == std::vector<Integer>{1});
  CHECK(one.generator == s2);

  // relative to a base field
  FieldElement base[] = {s2};
  FieldElement rel[] = {s3};
  auto r = primitive_combination(rel, k4, base);
  CHECK(r.coefficients == std::vector<Integer>{1});

  auto k8 = field_of({-2, 0, 0, 0, 0, 0, 0, 0, 1});
  FieldElement gens[] = {k8.power_of_generator(4), k8.power_of_generator(6), k8.power_of_generator(2)};
  auto g = primitive_combination(gens, k8);
  CHECK(element_degree(g.generator, k8) == 4);
}
