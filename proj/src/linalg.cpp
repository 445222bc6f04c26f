#include "succmin/linalg.hpp"

#include <algorithm>
#include <utility>

namespace succmin::exact {

Echelon row_reduce(MatrixQ m) {
  Echelon out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    Rational inv = 1 / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

namespace {

// Each row scaled by the lcm of its denominators.
MatrixZ integer_rows(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    for (Index c = 0; c < m.cols(); ++c) den = lcm(den, denominator(m(r, c)));
    for (Index c = 0; c < m.cols(); ++c) out(r, c) = numerator(m(r, c)) * (den / denominator(m(r, c)));
  }
  return out;
}

// Bareiss forward elimination in place; returns rank and tracks the sign of
// row swaps. For square full-rank input the last pivot is the determinant.
Index bareiss(MatrixZ& a, int& sign) {
  sign = 1;
  Integer prev = 1;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      a.row(pivot).swap(a.row(row));
      sign = -sign;
    }
    for (Index r = row + 1; r < a.rows(); ++r) {
      for (Index c = col + 1; c < a.cols(); ++c) {
        a(r, c) = (a(r, c) * a(row, col) - a(r, col) * a(row, c)) / prev;
      }
      a(r, col) = 0;
    }
    prev = a(row, col);
    ++row;
  }
  return row;
}

}  // namespace

Index rank(const MatrixQ& m) {
  MatrixZ a = integer_rows(m);
  int sign = 1;
  return bareiss(a, sign);
}

Integer determinant(const MatrixZ& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return Integer(1);
  MatrixZ a = m;
  int sign = 1;
  Index r = bareiss(a, sign);
  if (r < a.rows()) return Integer(0);
  return sign * a(a.rows() - 1, a.cols() - 1);
}

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  Integer scale = 1;
  MatrixZ a(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    for (Index c = 0; c < m.cols(); ++c) den = lcm(den, denominator(m(r, c)));
    scale *= den;
    for (Index c = 0; c < m.cols(); ++c) a(r, c) = numerator(m(r, c)) * (den / denominator(m(r, c)));
  }
  return Rational(determinant(a), scale);
}

MatrixQ inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  const Index n = m.rows();
  MatrixQ aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixQ::Identity(n, n);
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] >= n) throw InvalidInput("matrix is singular");
  return e.reduced.rightCols(n);
}

std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b) {
  MatrixQ aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Echelon e = row_reduce(std::move(aug));
  VectorQ x = VectorQ::Zero(a.cols());
  for (Index r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(r, a.cols());
  }
  return x;
}

MatrixQ nullspace(const MatrixQ& a) {
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatrixQ basis = MatrixQ::Zero(a.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    Index f = free_cols[k];
    basis(f, static_cast<Index>(k)) = 1;
    for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[r], static_cast<Index>(k)) = -e.reduced(r, f);
  }
  return basis;
}

VectorZ primitive_integer_direction(const VectorQ& v) {
  Integer den = 1;
  for (Index i = 0; i < v.size(); ++i) den = lcm(den, denominator(v(i)));
  VectorZ z(v.size());
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    z(i) = numerator(v(i)) * (den / denominator(v(i)));
    g = gcd(g, z(i));
  }
  if (g > 1)
    for (Index i = 0; i < z.size(); ++i) z(i) /= g;
  return z;
}

Integer common_denominator(const MatrixQ& m) {
  Integer den = 1;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) den = lcm(den, denominator(m(r, c)));
  return den;
}

MatrixQ to_rational(const MatrixZ& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

MatrixZ to_integer(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (!is_integer(m(r, c))) throw InvalidInput("matrix entry " + to_string(m(r, c)) + " is not integral");
      out(r, c) = numerator(m(r, c));
    }
  }
  return out;
}

namespace {

// Row HNF with the unimodular transform accumulated into `u` (u * a_in = a_out).
void hnf_in_place(MatrixZ& a, MatrixZ& u) {
  const Index rows = a.rows();
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < rows; ++col) {
    // Euclid on column `col` among rows >= row until one nonzero remains.
    while (true) {
      Index best = -1;
      for (Index r = row; r < rows; ++r) {
        if (a(r, col) == 0) continue;
        if (best < 0 || bmp::abs(a(r, col)) < bmp::abs(a(best, col))) best = r;
      }
      if (best < 0) break;
      if (best != row) {
        a.row(best).swap(a.row(row));
        u.row(best).swap(u.row(row));
      }
      bool done = true;
      for (Index r = row + 1; r < rows; ++r) {
        if (a(r, col) == 0) continue;
        Integer q = a(r, col) / a(row, col);
        a.row(r) -= q * a.row(row);
        u.row(r) -= q * u.row(row);
        if (a(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      a.row(row) *= Integer(-1);
      u.row(row) *= Integer(-1);
    }
    for (Index r = 0; r < row; ++r) {
      Integer q = a(r, col) / a(row, col);
      if (a(r, col) - q * a(row, col) < 0) q -= 1;
      if (q != 0) {
        a.row(r) -= q * a.row(row);
        u.row(r) -= q * u.row(row);
      }
    }
    ++row;
  }
}

}  // namespace

MatrixZ hermite_normal_form(const MatrixZ& a) {
  MatrixZ h = a;
  MatrixZ u = MatrixZ::Identity(a.rows(), a.rows());
  hnf_in_place(h, u);
  Index nonzero = 0;
  for (Index r = 0; r < h.rows(); ++r) {
    bool zero = true;
    for (Index c = 0; c < h.cols(); ++c)
      if (h(r, c) != 0) zero = false;
    if (!zero) nonzero = r + 1;
  }
  return h.topRows(nonzero);
}

MatrixZ saturating_completion(const MatrixZ& w) {
  // R * W = [H; 0] with R unimodular; x lies in the Q-span of W iff the last
  // n - k coordinates of R x vanish, so the first k columns of R^{-1} span the
  // saturation.
  const Index n = w.rows();
  MatrixZ h = w;
  MatrixZ r = MatrixZ::Identity(n, n);
  hnf_in_place(h, r);
  MatrixQ rinv = inverse(to_rational(r));
  return to_integer(rinv);
}

VectorQ SpanBuilder::reduce(VectorQ v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& f = v(pivots_[k]);
    if (f != 0) {
      Rational factor = f;
      v -= factor * rows_[k];
    }
  }
  return v;
}

bool SpanBuilder::contains(const VectorQ& v) const {
  if (v.size() != dim_) throw InvalidInput("SpanBuilder: dimension mismatch");
  VectorQ r = reduce(v);
  for (Index i = 0; i < r.size(); ++i)
    if (r(i) != 0) return false;
  return true;
}

bool SpanBuilder::add(const VectorQ& v) {
  if (v.size() != dim_) throw InvalidInput("SpanBuilder: dimension mismatch");
  VectorQ r = reduce(v);
  Index pivot = -1;
  for (Index i = 0; i < r.size(); ++i) {
    if (r(i) != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return false;
  r /= Rational(r(pivot));
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    if (row(pivot) != 0) {
      Rational f = row(pivot);
      row -= f * r;
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace succmin::exact
