#include <doctest.h>

#include "succmin/radix.hpp"
#include "succmin/core.hpp"

using namespace succmin;
using namespace succmin::radix;

namespace {

// Counts ordered factorizations by the recurrence f(1) = 1, f(n) = sum f(n/d).
int count_ordered_factorizations(int n) {
  if (n == 1) return 1;
  int total = 0;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) total += count_ordered_factorizations(n / d);
  return total;
}

// Digit-wise addition with explicit carry propagation.
bool carries(int i, int j, const std::vector<int>& radices) {
  for (int r : radices) {
    if (i % r + j % r >= r) return true;
    i /= r;
    j /= r;
  }
  return false;
}

}  // namespace

TEST_CASE("tower_types enumerates ordered factorizations") {
  auto t8 = tower_types(8);
  REQUIRE(t8.size() == 4);
  CHECK(t8[0].to_string() == "2,2,2");
  CHECK(t8[1].to_string() == "2,4");
  CHECK(t8[2].to_string() == "4,2");
  CHECK(t8[3].to_string() == "8");
  CHECK(tower_types(7).size() == 1);
  for (int n = 2; n <= 64; ++n) {
    auto ts = tower_types(n);
    CHECK(static_cast<int>(ts.size()) == count_ordered_factorizations(n));
    for (const auto& t : ts) CHECK(t.degree() == n);
    for (std::size_t k = 1; k < ts.size(); ++k) CHECK(ts[k - 1] < ts[k]);
  }
  CHECK(tower_types(12).size() == 8);
  CHECK_THROWS_AS(tower_types(1), InvalidInput);
}

TEST_CASE("tower type parsing and validation") {
  CHECK(TowerType::parse("2,4") == TowerType({2, 4}));
  CHECK(TowerType::parse(" 3 , 2 ").degree() == 6);
  CHECK_THROWS_AS(TowerType::parse("2,,4"), InvalidInput);
  CHECK_THROWS_AS(TowerType::parse("x"), InvalidInput);
  CHECK_THROWS_AS(TowerType({1, 4}), InvalidInput);
  CHECK_THROWS_AS(TowerType({}), InvalidInput);
  CHECK(TowerType({2, 3, 2}).prefix_degree(2) == 6);
}

TEST_CASE("mixed radix digits") {
  TowerType t24({2, 4});
  CHECK(to_mixed_radix(3, t24).values == std::vector<int>{1, 1});
  CHECK(to_mixed_radix(0, t24).values == std::vector<int>{0, 0});
  CHECK(to_mixed_radix(6, TowerType({8})).values == std::vector<int>{6});
  CHECK(from_mixed_radix(Digits{{1, 1}}, t24) == 3);
  CHECK(from_mixed_radix(Digits{{1, 3}}, t24) == 7);
  CHECK_THROWS_AS(to_mixed_radix(8, t24), RangeError);
  CHECK_THROWS_AS(to_mixed_radix(-1, t24), RangeError);
  CHECK_THROWS_AS(from_mixed_radix(Digits{{2, 0}}, t24), RangeError);
  for (int n = 2; n <= 36; ++n)
    for (const auto& t : tower_types(n))
      for (int i = 0; i < n; ++i) CHECK(from_mixed_radix(to_mixed_radix(i, t), t) == i);
}

TEST_CASE("overflow predicate") {
  CHECK_FALSE(overflows(3, 3, TowerType({8})));
  CHECK(overflows(3, 3, TowerType({2, 4})));
  CHECK_THROWS_AS(overflows(4, 4, TowerType({8})), RangeError);
  for (int n = 2; n <= 30; ++n) {
    for (const auto& t : tower_types(n)) {
      for (int i = 0; i < n; ++i) {
        CHECK_FALSE(overflows(i, 0, t));
        for (int j = 0; i + j < n; ++j) {
          CHECK(overflows(i, j, t) == overflows(j, i, t));
          CHECK(overflows(i, j, t) == carries(i, j, t.parts()));
        }
      }
    }
  }
}

TEST_CASE("residue and exthm conditions") {
  CHECK_FALSE(residue_condition(3, 3, 2));
  CHECK(residue_condition(5, 7, 1));
  CHECK_FALSE(residue_condition(2, 2, 4));
  CHECK_THROWS_AS(residue_condition(1, 1, 0), InvalidInput);
  CHECK(residue_condition(9, 12, 5) == ((9 % 5) + (12 % 5) == 21 % 5));

  CHECK(exthm_condition(2, 3, {1, 8}, 8));
  CHECK_FALSE(exthm_condition(3, 3, {1, 2, 8}, 8));
  CHECK_THROWS_AS(exthm_condition(1, 1, {1, 3, 8}, 8), InvalidInput);
  CHECK_THROWS_AS(exthm_condition(1, 1, {2, 8}, 8), InvalidInput);
  for (int n = 2; n <= 24; ++n)
    for (int i = 0; i < n; ++i) CHECK(exthm_condition(i, n - 1 - i, divisors(n), n));
}
