#include <doctest.h>

#include "succmin/geometry.hpp"
#include "succmin/scrollar.hpp"

#include <functional>
#include <random>

using namespace succmin;
using namespace succmin::scrollar;

namespace {

SplittingType S(int n, long g, std::vector<long> a, long degL = 0) { return SplittingType{n, g, degL, std::move(a)}; }

// Every sorted a with a_0 = 0 and sum g + n - 1.
void for_each_structure_sheaf(int n, long g, const std::function<void(const SplittingType&)>& f) {
  std::vector<long> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, long, long)> rec = [&](int i, long lo, long left) {
    if (i == n) {
      if (left == 0) f(S(n, g, a));
      return;
    }
    for (long v = lo; v * (n - i) <= left; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v, left - v);
    }
  };
  if (n == 1) {
    if (g == 0) f(S(1, 0, {0}));
    return;
  }
  rec(1, 0, g + n - 1);
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(S(2, 1, {0, 2})));
  CHECK_THROWS_AS(validate(S(2, 1, {0, 3})), InvalidInput);
  CHECK_THROWS_AS(validate(S(2, 1, {2, 0})), InvalidInput);
  CHECK_THROWS_AS(validate(S(3, 1, {0, 2})), InvalidInput);
  CHECK_NOTHROW(validate(S(2, 1, {-1, 1}, 2)));
}

TEST_CASE("h0 values") {
  SplittingType s = S(2, 1, {0, 2});
  CHECK(h0(s, -5) == 0);
  CHECK(h0(s, 0) == 1);
  // large j: degL + j n - g + 1
  for (long j = 3; j < 10; ++j) CHECK(h0(s, j) == s.degL + j * s.n - s.g + 1);
  SplittingType t = S(3, 2, {-1, 0, 1}, 4);
  validate(t);
  for (long j = 2; j < 10; ++j) CHECK(h0(t, j) == t.degL + j * t.n - t.g + 1);
}

TEST_CASE("minima from h0") {
  CHECK(minima_from_h0(h0_table(S(2, 1, {0, 2}), -1, 3), 2) == std::vector<long>{0, 2});
  H0Table constant{-1, {0, 3, 6, 9}};
  CHECK(minima_from_h0(constant, 3) == std::vector<long>{0, 0, 0});
  CHECK_THROWS_AS(minima_from_h0(H0Table{0, {0, 2, 3}}, 2), InvalidInput);
  CHECK_THROWS_AS(minima_from_h0(H0Table{0, {1, 2, 4}}, 2), InvalidInput);
  CHECK_THROWS_AS(minima_from_h0(H0Table{0, {0, 1, 2}}, 2), InvalidInput);
}

TEST_CASE("round trip sweep") {
  std::size_t count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (long g = 0; g <= 12; ++g) {
      for_each_structure_sheaf(n, g, [&](const SplittingType& s) {
        for (long c : {0L, -2L, 3L}) {
          SplittingType t = s;
          for (auto& x : t.a) x += c;
          t.degL = -static_cast<long>(n) * c;
          validate(t);
          H0Table h = h0_table(t, t.a.front() - 1, t.a.back());
          CHECK(minima_from_h0(h, n) == t.a);
          ++count;
        }
      });
    }
  }
  CHECK(count > 1000);
}

TEST_CASE("maroni") {
  CHECK(maroni_check(S(2, 1, {0, 2})));
  CHECK(maroni_check(S(4, 9, {0, 4, 4, 4})));
  CHECK_FALSE(maroni_check(S(3, 20, {0, 0, 22})));
  CHECK_THROWS_AS(maroni_check(S(2, 1, {-1, 1}, 2)), InvalidInput);
}

TEST_CASE("bounds on a_1") {
  // lower (g+n-1)/3 = 2, upper (g+n+1)/2 = 4
  CHECK(dp_bounds_check(S(3, 4, {0, 3, 3})));
  auto low = dp_bounds(S(3, 4, {0, 1, 5}));
  CHECK_FALSE(low.lower_holds);
  CHECK(low.upper_holds);
  CHECK(low.lower == 2);
  CHECK(low.upper == 4);
  CHECK_FALSE(dp_bounds_check(S(3, 1, {0, 0, 3})));
  // sortedness and the sum force a_1 <= (g+n-1)/(n-1), so the upper bound always holds
  for (int n = 2; n <= 5; ++n)
    for (long g = 0; g <= 10; ++g)
      for_each_structure_sheaf(n, g, [](const SplittingType& s) { CHECK(dp_bounds(s).upper_holds); });
}

TEST_CASE("scrollar constraints") {
  SplittingType s = S(4, 5, {0, 2, 3, 3});
  // primitive type T(i,j) = min(i+j, n-1)
  Eigen::MatrixXi prim(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) prim(i, j) = std::min(i + j, 3);
  CHECK(scrollar_constraints(s, s, nfield::FlagType(prim)).empty());
  for (const auto& v : scrollar_constraints(s, s, nfield::FlagType(prim))) CHECK(v.j != 0);

  // a_2 > 2 a_1 breaks x_2 <= 2 x_1
  SplittingType bad = S(4, 5, {0, 1, 3, 4});
  auto vs = scrollar_constraints(bad, bad, nfield::FlagType(prim));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].i == 1);
  CHECK(vs[0].j == 1);
  CHECK(vs[0].k == 2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<long> a{0};
    for (int i = 1; i < n; ++i) a.push_back(a.back() + static_cast<long>(rng() % 4));
    long sum = 0;
    for (long x : a) sum += x;
    SplittingType t = S(n, sum - n + 1, a);
    if (t.g < 0) continue;
    CHECK(scrollar_constraints(t, t, tightest_flag_type(t)).empty());
  }
}

TEST_CASE("geometric minkowski type") {
  VectorQ x = geometric_minkowski_type(S(2, 1, {0, 2}));
  CHECK(x.size() == 1);
  CHECK(x(0) == Rational(1, 2));
  for (int n : {4, 8}) {
    for (long g = 0; g <= 6; ++g) {
      for_each_structure_sheaf(n, g, [&](const SplittingType& s) {
        VectorQ v = geometric_minkowski_type(s);
        CHECK(v.sum() == Rational(1, 2));
        for (Index i = 1; i < v.size(); ++i) CHECK(v(i - 1) <= v(i));
      });
    }
  }
  // balanced splitting types lie in Len((n))
  auto len4 = geometry::lenstra_polytope(radix::TowerType({4}));
  CHECK(geometry::contains(len4, geometric_minkowski_type(S(4, 9, {0, 4, 4, 4}))));
  CHECK_FALSE(geometry::contains(len4, geometric_minkowski_type(S(4, 9, {0, 1, 3, 8}))));
}
