#include <doctest.h>

#include "succmin/geometry.hpp"
#include "succmin/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace succmin;
using namespace succmin::geometry;

namespace {

VectorQ point(std::vector<Rational> xs) {
  VectorQ v(static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Index>(i)) = xs[i];
  return v;
}

std::string key(const VectorQ& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) s += to_string(v(i)) + " ";
  return s;
}

// Brute-force vertices: every choice of dim rows among equalities plus
// inequalities with a unique solution that satisfies everything.
std::set<std::string> vertex_oracle(const RationalPolytope& p) {
  const Index d = p.dim();
  std::vector<std::pair<VectorQ, Rational>> rows;
  for (const auto& c : p.inequalities()) rows.emplace_back(c.a, c.b);
  const std::size_t m = rows.size();
  std::set<std::string> out;
  const Index e = static_cast<Index>(p.equalities().size());
  const Index need = d - e;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + std::min<std::size_t>(m, static_cast<std::size_t>(std::max<Index>(need, 0))), true);
  if (need < 0 || static_cast<std::size_t>(need) > m) return out;
  std::sort(pick.begin(), pick.end(), std::greater<>());
  do {
    MatrixQ a(d, d);
    VectorQ b(d);
    Index r = 0;
    for (const auto& c : p.equalities()) {
      a.row(r) = c.a.transpose();
      b(r++) = c.b;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (!pick[k]) continue;
      a.row(r) = rows[k].first.transpose();
      b(r++) = rows[k].second;
    }
    if (exact::rank(a) < d) continue;
    VectorQ x = exact::inverse(a) * b;
    if (contains(p, x)) out.insert(key(x));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::set<std::string> keys(const std::vector<VectorQ>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(key(v));
  return out;
}

}  // namespace

TEST_CASE("Lenstra polytopes: small cases") {
  auto p2 = lenstra_polytope(radix::TowerType({2}));
  auto v2 = vertices(p2);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0](0) == Rational(1, 2));
  CHECK(relative_interior_point(p2)(0) == Rational(1, 2));
  CHECK(dimension(p2) == 0);

  auto p3 = lenstra_polytope(radix::TowerType({3}));
  auto v3 = vertices(p3);
  CHECK(keys(v3) == vertex_oracle(p3));
  REQUIRE(v3.size() == 2);
  CHECK(v3[0] == point({Rational(1, 6), Rational(1, 3)}));
  CHECK(v3[1] == point({Rational(1, 4), Rational(1, 4)}));

  for (int n = 2; n <= 7; ++n) {
    for (const auto& t : radix::tower_types(n)) {
      auto p = lenstra_polytope(t);
      CHECK(keys(vertices(p)) == vertex_oracle(p));
      CHECK(dimension(p) == n - 2);
      VectorQ c = relative_interior_point(p);
      CHECK(contains(p, c));
      for (const auto& ineq : p.inequalities())
        if (is_facet(p, ineq)) CHECK(ineq.a.dot(c) < ineq.b);
    }
  }
}

TEST_CASE("membership of the degree-8 point") {
  VectorQ x = point({4, 5, 5, 8, 8, 12, 12}) / Rational(108);
  CHECK(x.sum() == Rational(1, 2));
  CHECK_FALSE(contains(lenstra_polytope(radix::TowerType({8})), x));
  CHECK(contains(lenstra_polytope(radix::TowerType({2, 4})), x));
  CHECK_THROWS_AS(contains(lenstra_polytope(radix::TowerType({4})), x), InvalidInput);
}

TEST_CASE("constraint deduplication") {
  RationalPolytope p(2);
  p.add_inequality(point({1, 1}), 1, "a");
  p.add_inequality(point({2, 2}), 2, "b");
  p.add_inequality(point({Rational(1, 2), Rational(1, 2)}), Rational(1, 2), "c");
  p.add_inequality(point({0, 0}), 3, "trivial");
  CHECK(p.inequalities().size() == 1);
  CHECK(p.inequalities()[0].label == "a");
  p.add_inequality(point({-1, -1}), 1);
  CHECK(p.inequalities().size() == 2);
  p.add_equality(point({1, 0}), 0);
  p.add_equality(point({-3, 0}), 0);
  CHECK(p.equalities().size() == 1);
}

TEST_CASE("vertices: random bounded polytopes against the oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    Index dim = 2 + trial % 3;
    RationalPolytope p(dim);
    for (Index i = 0; i < dim; ++i) {
      VectorQ e = VectorQ::Zero(dim);
      e(i) = 1;
      p.add_inequality(e, 3);
      p.add_inequality(-e, 3);
    }
    for (int k = 0; k < 4; ++k) {
      VectorQ a(dim);
      for (Index i = 0; i < dim; ++i) a(i) = d(rng);
      p.add_inequality(a, Rational(d(rng) + 4));
    }
    CHECK(keys(vertices(p)) == vertex_oracle(p));
  }
  RationalPolytope empty(2);
  empty.add_inequality(point({1, 0}), -1);
  empty.add_inequality(point({-1, 0}), -1);
  empty.add_inequality(point({0, 1}), 1);
  empty.add_inequality(point({0, -1}), 1);
  CHECK(vertices(empty).empty());
  CHECK(dimension(empty) == -1);
  CHECK_THROWS_AS(relative_interior_point(empty), EmptyPolytope);

  RationalPolytope half(2);
  half.add_inequality(point({1, 0}), 1);
  CHECK_THROWS_AS(vertices(half), UnboundedPolytope);
  RationalPolytope wedge(2);
  wedge.add_inequality(point({-1, 0}), 0);
  wedge.add_inequality(point({0, -1}), 0);
  CHECK_THROWS_AS(vertices(wedge), UnboundedPolytope);
}

TEST_CASE("flag polytope of the (2,2) flag") {
  Eigen::MatrixXi table(4, 4);
  table << 0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3;
  auto p = flag_polytope(nfield::FlagType(table));
  // (1,2) and (2,2) survive the T(i,j) > max(i,j) filter
  CHECK(p.inequalities().size() == 5);
  CHECK(dimension(p) == 2);
  CHECK(keys(vertices(p)) == vertex_oracle(p));
  auto len = lenstra_polytope(radix::TowerType({2, 2}));
  CHECK(keys(vertices(p)) == keys(vertices(len)));
}

TEST_CASE("facets of Lenstra polytopes") {
  auto p = lenstra_polytope(radix::TowerType({3}));
  CHECK_FALSE(is_facet(p, p.inequalities()[0]));  // x1 >= 0 misses the segment
  auto fs = facets(p);
  CHECK(fs.size() == 2);
  auto p8 = lenstra_polytope(radix::TowerType({8}));
  CHECK(dimension(p8) == 6);
  CHECK(facets(p8).size() >= 7);
}

TEST_CASE("union containment") {
  auto l8 = lenstra_polytope(radix::TowerType({8}));
  auto l24 = lenstra_polytope(radix::TowerType({2, 4}));
  auto self = union_contains(l8, {l8});
  CHECK(self.contained);
  CHECK(union_contains(l8, spectrum_union(8)).contained);
  auto res = union_contains(l24, {l8});
  CHECK_FALSE(res.contained);
  REQUIRE(res.witness.has_value());
  CHECK(contains(l24, *res.witness));
  CHECK_FALSE(contains(l8, *res.witness));

  // a square split between two triangles
  RationalPolytope sq(2), lower(2), upper(2);
  for (auto* q : {&sq, &lower, &upper}) {
    q->add_inequality(point({-1, 0}), 0);
    q->add_inequality(point({1, 0}), 1);
    q->add_inequality(point({0, -1}), 0);
    q->add_inequality(point({0, 1}), 1);
  }
  lower.add_inequality(point({-1, 1}), 0);
  upper.add_inequality(point({1, -1}), 0);
  CHECK(union_contains(sq, {lower, upper}).contained);
  CHECK_FALSE(union_contains(sq, {lower}).contained);
  RationalPolytope strip = lower;
  strip.add_inequality(point({1, -1}), Rational(1, 2));
  auto gap = union_contains(sq, {strip, upper});
  CHECK_FALSE(gap.contained);
  CHECK(gap.witness->x() - gap.witness->y() > Rational(1, 2));
  RationalPolytope wide = sq;
  wide.add_inequality(point({-1, 1}), Rational(1, 2));
  CHECK(union_contains(sq, {wide, upper}).contained);
  RationalPolytope shrunk = upper;
  shrunk.add_inequality(point({0, 1}), Rational(9, 10));
  auto miss = union_contains(sq, {lower, shrunk});
  CHECK_FALSE(miss.contained);
  CHECK(contains(sq, *miss.witness));
  CHECK_THROWS_AS(union_contains(sq, {lower, shrunk}, 1), ResourceLimit);

  CHECK(spectrum_union(8).size() == 4);
  CHECK(spectrum_union(7).size() == 1);
  CHECK(spectrum_union(12).size() == 8);
}
