#include "succmin/geometry.hpp"

#include "succmin/linalg.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

namespace succmin::geometry {

namespace {

std::string xname(Index idx) { return "x" + std::to_string(idx + 1); }

/// Positive rescaling of (a, b) to a primitive integer row; false when a = 0.
bool normalize(VectorQ& a, Rational& b) {
  VectorQ ab(a.size() + 1);
  ab << a, b;
  VectorZ z = exact::primitive_integer_direction(ab);
  bool zero = true;
  for (Index i = 0; i < a.size(); ++i) zero = zero && z(i) == 0;
  if (zero) return false;
  for (Index i = 0; i < a.size(); ++i) a(i) = Rational(z(i));
  b = Rational(z(a.size()));
  return true;
}

std::string key_of(char kind, const VectorQ& a, const Rational& b) {
  std::string k(1, kind);
  for (Index i = 0; i < a.size(); ++i) k += to_string(a(i)) + ",";
  return k + to_string(b);
}

bool lex_less(const VectorQ& u, const VectorQ& v) {
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i) < v(i)) return true;
    if (v(i) < u(i)) return false;
  }
  return false;
}

/// x = origin + basis * y parameterizes the affine hull of the equalities.
struct Reduced {
  bool empty = false;
  VectorQ origin;
  MatrixQ basis;
  MatrixQ a;  // inequalities in y
  VectorQ b;
};

Reduced reduce(const RationalPolytope& p) {
  Reduced r;
  const Index d = p.dim();
  const Index m = static_cast<Index>(p.equalities().size());
  if (m == 0) {
    r.origin = VectorQ::Zero(d);
    r.basis = MatrixQ::Identity(d, d);
  } else {
    MatrixQ eq(m, d);
    VectorQ rhs(m);
    for (Index i = 0; i < m; ++i) {
      eq.row(i) = p.equalities()[static_cast<std::size_t>(i)].a.transpose();
      rhs(i) = p.equalities()[static_cast<std::size_t>(i)].b;
    }
    auto sol = exact::solve(eq, rhs);
    if (!sol) {
      r.empty = true;
      return r;
    }
    r.origin = *sol;
    r.basis = exact::nullspace(eq);
  }
  const Index k = static_cast<Index>(p.inequalities().size());
  r.a.resize(k, r.basis.cols());
  r.b.resize(k);
  for (Index i = 0; i < k; ++i) {
    const auto& c = p.inequalities()[static_cast<std::size_t>(i)];
    r.a.row(i) = (c.a.transpose() * r.basis);
    r.b(i) = c.b - c.a.dot(r.origin);
  }
  return r;
}

using Bits = boost::dynamic_bitset<>;

struct Ray {
  VectorQ v;
  Bits zero;
};

VectorQ primitive(const VectorQ& v) { return exact::to_rational(MatrixZ(exact::primitive_integer_direction(v))); }

/// Extreme rays of the pointed cone {z : h z >= 0} (rows of h have full
/// column rank). Double description with the combinatorial adjacency test.
std::vector<VectorQ> extreme_rays(const MatrixQ& h) {
  const Index rows = h.rows();
  const Index dim = h.cols();
  std::vector<Index> order;
  exact::SpanBuilder span(dim);
  for (Index i = 0; i < rows && span.dimension() < dim; ++i)
    if (span.add(h.row(i).transpose())) order.push_back(i);
  if (span.dimension() < dim) throw Error("cone is not pointed");
  std::vector<bool> used(static_cast<std::size_t>(rows), false);
  for (Index i : order) used[static_cast<std::size_t>(i)] = true;

  MatrixQ init(dim, dim);
  for (Index k = 0; k < dim; ++k) init.row(k) = h.row(order[static_cast<std::size_t>(k)]);
  MatrixQ inv = exact::inverse(init);
  std::vector<Ray> rays;
  for (Index k = 0; k < dim; ++k) {
    Ray r{primitive(inv.col(k)), Bits(static_cast<std::size_t>(rows))};
    for (Index t = 0; t < dim; ++t)
      if (t != k) r.zero.set(static_cast<std::size_t>(order[static_cast<std::size_t>(t)]));
    rays.push_back(std::move(r));
  }

  for (Index row = 0; row < rows; ++row) {
    if (used[static_cast<std::size_t>(row)]) continue;
    const VectorQ hr = h.row(row).transpose();
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = hr.dot(rays[k].v);
      if (val[k] > 0)
        pos.push_back(k);
      else if (val[k] < 0)
        neg.push_back(k);
      else
        zer.push_back(k);
    }
    if (neg.empty()) {
      for (auto k : zer) rays[k].zero.set(static_cast<std::size_t>(row));
      continue;
    }
    std::vector<Ray> next;
    for (auto k : pos) next.push_back(rays[k]);
    for (auto k : zer) {
      next.push_back(rays[k]);
      next.back().zero.set(static_cast<std::size_t>(row));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (static_cast<Index>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.is_subset_of(rays[k].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{primitive(val[p] * rays[q].v - val[q] * rays[p].v), common};
        r.zero.set(static_cast<std::size_t>(row));
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    used[static_cast<std::size_t>(row)] = true;
  }
  std::vector<VectorQ> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

/// Vertices in y-coordinates of {a y <= b}.
std::vector<VectorQ> reduced_vertices(const MatrixQ& a, const VectorQ& b) {
  const Index d = a.cols();
  std::vector<Index> rows;
  for (Index i = 0; i < a.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < d; ++j) zero = zero && a(i, j) == 0;
    if (zero) {
      if (b(i) < 0) return {};
      continue;
    }
    rows.push_back(i);
  }
  if (d == 0) return {VectorQ(0)};

  MatrixQ arows(static_cast<Index>(rows.size()), d);
  VectorQ brows(static_cast<Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    arows.row(static_cast<Index>(k)) = a.row(rows[k]);
    brows(static_cast<Index>(k)) = b(rows[k]);
  }

  if (exact::rank(arows) < d) {
    // A lineality direction exists: nonempty means unbounded.
    exact::Echelon e = exact::row_reduce(arows);
    MatrixQ comp = e.reduced.topRows(e.rank()).transpose();
    std::vector<VectorQ> proj = reduced_vertices(arows * comp, brows);
    if (proj.empty()) return {};
    throw UnboundedPolytope("polytope is unbounded");
  }

  // homogenized cone over (y, t): t >= 0 and b t - a y >= 0
  MatrixQ h(arows.rows() + 1, d + 1);
  h.row(0).setZero();
  h(0, d) = 1;
  for (Index i = 0; i < arows.rows(); ++i) {
    h.block(i + 1, 0, 1, d) = -arows.row(i);
    h(i + 1, d) = brows(i);
  }
  std::vector<VectorQ> out;
  bool recession = false;
  for (const auto& r : extreme_rays(h)) {
    if (r(d) > 0)
      out.push_back(r.head(d) / r(d));
    else
      recession = true;
  }
  if (!out.empty() && recession) throw UnboundedPolytope("polytope is unbounded");
  return out;
}

int affine_rank(const std::vector<VectorQ>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  MatrixQ diff(static_cast<Index>(pts.size() - 1), pts.front().size());
  for (std::size_t k = 1; k < pts.size(); ++k) diff.row(static_cast<Index>(k - 1)) = (pts[k] - pts.front()).transpose();
  return static_cast<int>(exact::rank(diff));
}

}  // namespace

RationalPolytope::RationalPolytope(Index dim) : dim_(dim) {
  if (dim < 0) throw InvalidInput("negative dimension");
}

void RationalPolytope::add_equality(VectorQ a, Rational b, std::string label) {
  if (a.size() != dim_) throw InvalidInput("constraint dimension mismatch");
  if (!normalize(a, b)) {
    if (b != 0) {
      // 0 = b with b != 0: record an infeasible pair of inequalities
      add_inequality(VectorQ::Zero(dim_), Rational(-1), label);
    }
    return;
  }
  // sign: first nonzero coefficient positive
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != 0) {
      if (a(i) < 0) {
        a = -a;
        b = -b;
      }
      break;
    }
  }
  std::string key = key_of('=', a, b);
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return;
  keys_.push_back(key);
  equalities_.push_back({std::move(a), std::move(b), std::move(label)});
}

void RationalPolytope::add_inequality(VectorQ a, Rational b, std::string label) {
  if (a.size() != dim_) throw InvalidInput("constraint dimension mismatch");
  if (!normalize(a, b)) {
    if (b >= 0) return;
    a = VectorQ::Zero(dim_);
    b = -1;
  }
  std::string key = key_of('<', a, b);
  if (std::find(keys_.begin(), keys_.end(), key) != keys_.end()) return;
  keys_.push_back(key);
  inequalities_.push_back({std::move(a), std::move(b), std::move(label)});
}

Constraint sum_constraint(Index dim, int k, int i, int j) {
  VectorQ a = VectorQ::Zero(dim);
  a(k - 1) += 1;
  a(i - 1) -= 1;
  a(j - 1) -= 1;
  return {a, Rational(0), xname(k - 1) + " <= " + xname(i - 1) + " + " + xname(j - 1)};
}

namespace {

RationalPolytope base_polytope(int n) {
  if (n < 2) throw InvalidInput("polytope needs degree >= 2");
  const Index d = n - 1;
  RationalPolytope p(d);
  p.add_equality(VectorQ::Ones(d), Rational(1, 2), "sum = 1/2");
  VectorQ a = VectorQ::Zero(d);
  a(0) = -1;
  p.add_inequality(a, Rational(0), "x1 >= 0");
  for (Index k = 0; k + 1 < d; ++k) {
    a.setZero();
    a(k) = 1;
    a(k + 1) = -1;
    p.add_inequality(a, Rational(0), xname(k) + " <= " + xname(k + 1));
  }
  return p;
}

}  // namespace

RationalPolytope lenstra_polytope(const radix::TowerType& tower) {
  const int n = tower.degree();
  RationalPolytope p = base_polytope(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i; i + j < n; ++j) {
      if (radix::overflows(i, j, tower)) continue;
      Constraint c = sum_constraint(n - 1, i + j, i, j);
      p.add_inequality(std::move(c.a), std::move(c.b), std::move(c.label));
    }
  }
  return p;
}

RationalPolytope flag_polytope(const nfield::FlagType& type) {
  const int n = type.degree();
  RationalPolytope p = base_polytope(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int k = type(i, j);
      if (k <= j) continue;
      Constraint c = sum_constraint(n - 1, k, i, j);
      p.add_inequality(std::move(c.a), std::move(c.b), std::move(c.label));
    }
  }
  return p;
}

bool contains(const RationalPolytope& p, const VectorQ& x) {
  if (x.size() != p.dim())
    throw InvalidInput("point has dimension " + std::to_string(x.size()) + ", polytope " + std::to_string(p.dim()));
  for (const auto& c : p.equalities())
    if (c.a.dot(x) != c.b) return false;
  for (const auto& c : p.inequalities())
    if (c.a.dot(x) > c.b) return false;
  return true;
}

std::vector<VectorQ> vertices(const RationalPolytope& p) {
  Reduced r = reduce(p);
  if (r.empty) return {};
  std::vector<VectorQ> out;
  for (const auto& y : reduced_vertices(r.a, r.b)) out.push_back(r.origin + r.basis * y);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

int dimension(const RationalPolytope& p) { return affine_rank(vertices(p)); }

namespace {

VectorQ centroid(const std::vector<VectorQ>& vs) {
  VectorQ c = VectorQ::Zero(vs.front().size());
  for (const auto& v : vs) c += v;
  return c / Rational(static_cast<long>(vs.size()));
}

bool is_facet_of(const std::vector<VectorQ>& vs, int dim, const Constraint& c) {
  std::vector<VectorQ> tight;
  for (const auto& v : vs)
    if (c.a.dot(v) == c.b) tight.push_back(v);
  if (tight.size() == vs.size()) return false;
  return affine_rank(tight) == dim - 1;
}

}  // namespace

VectorQ relative_interior_point(const RationalPolytope& p) {
  auto vs = vertices(p);
  if (vs.empty()) throw EmptyPolytope("polytope is empty");
  return centroid(vs);
}

bool is_facet(const RationalPolytope& p, const Constraint& c) {
  if (c.a.size() != p.dim()) throw InvalidInput("constraint dimension mismatch");
  auto vs = vertices(p);
  if (vs.empty()) return false;
  return is_facet_of(vs, affine_rank(vs), c);
}

std::vector<Constraint> facets(const RationalPolytope& p) {
  auto vs = vertices(p);
  std::vector<Constraint> out;
  if (vs.empty()) return out;
  const int dim = affine_rank(vs);
  std::vector<Bits> seen;
  for (const auto& c : p.inequalities()) {
    if (!is_facet_of(vs, dim, c)) continue;
    Bits tight(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k)
      if (c.a.dot(vs[k]) == c.b) tight.set(k);
    if (std::find(seen.begin(), seen.end(), tight) != seen.end()) continue;
    seen.push_back(tight);
    out.push_back(c);
  }
  return out;
}

UnionResult union_contains(const RationalPolytope& p, const std::vector<RationalPolytope>& qs,
                           std::size_t cell_budget) {
  for (const auto& q : qs)
    if (q.dim() != p.dim()) throw InvalidInput("union_contains: dimension mismatch");
  UnionResult result;
  const int full = dimension(p);
  if (full < 0) {
    result.contained = true;
    return result;
  }

  // Q's equalities enter as two opposite inequalities.
  std::vector<std::vector<Constraint>> rows(qs.size());
  for (std::size_t q = 0; q < qs.size(); ++q) {
    for (const auto& c : qs[q].inequalities()) rows[q].push_back(c);
    for (const auto& c : qs[q].equalities()) {
      rows[q].push_back(c);
      rows[q].push_back({-c.a, -c.b, c.label});
    }
  }

  std::vector<RationalPolytope> stack{p};
  while (!stack.empty()) {
    RationalPolytope cell = std::move(stack.back());
    stack.pop_back();
    if (++result.cells > cell_budget) throw ResourceLimit("union_contains exceeded its cell budget");
    auto vs = vertices(cell);
    if (affine_rank(vs) < full) continue;  // lies in the closure of full cells

    bool covered = false;
    std::optional<Constraint> split;
    for (std::size_t q = 0; q < qs.size() && !covered; ++q) {
      bool excluded = false;
      std::optional<Constraint> first_split;
      for (const auto& c : rows[q]) {
        Rational lo = c.a.dot(vs.front()), hi = lo;
        for (const auto& v : vs) {
          Rational t = c.a.dot(v);
          lo = std::min(lo, t);
          hi = std::max(hi, t);
        }
        if (hi <= c.b) continue;
        if (lo >= c.b) {
          excluded = true;
          break;
        }
        if (!first_split) first_split = c;
      }
      if (excluded) continue;
      if (!first_split) {
        covered = true;
        break;
      }
      if (!split) split = first_split;
    }
    if (covered) continue;
    if (!split) {
      VectorQ w = centroid(vs);
      bool ok = contains(p, w);
      for (const auto& q : qs) ok = ok && !contains(q, w);
      if (!ok) throw ContradictionError("union_contains produced an invalid witness");
      result.contained = false;
      result.witness = w;
      return result;
    }
    RationalPolytope below = cell, above = cell;
    below.add_inequality(split->a, split->b, split->label);
    above.add_inequality(-split->a, -split->b, "not " + split->label);
    stack.push_back(std::move(above));
    stack.push_back(std::move(below));
  }
  result.contained = true;
  return result;
}

std::vector<RationalPolytope> spectrum_union(int n) {
  std::vector<RationalPolytope> out;
  for (const auto& t : radix::tower_types(n)) out.push_back(lenstra_polytope(t));
  return out;
}

}  // namespace succmin::geometry
