#include "succmin/lattice.hpp"
#include "succmin/linalg.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace succmin::lattice {

namespace {

struct Gso {
  MatrixR mu;
  VectorR r;  // squared Gram-Schmidt norms
};

Gso gso(const MatrixR& g) {
  const Index n = g.rows();
  Gso s{MatrixR::Zero(n, n), VectorR::Zero(n)};
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      Real v = g(i, j);
      for (Index l = 0; l < j; ++l) v -= s.mu(j, l) * s.mu(i, l) * s.r(l);
      s.mu(i, j) = v / s.r(j);
    }
    Real v = g(i, i);
    for (Index l = 0; l < i; ++l) v -= s.mu(i, l) * s.mu(i, l) * s.r(l);
    if (v <= 0) throw PrecisionError("Gram matrix is not positive definite at the working precision");
    s.r(i) = v;
    s.mu(i, i) = 1;
  }
  return s;
}

MatrixR to_real(const MatrixZ& b) {
  MatrixR out(b.rows(), b.cols());
  for (Index i = 0; i < b.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) out(i, j) = Real(b(i, j));
  return out;
}

MatrixR congruence(const MatrixZ& b, const MatrixR& g) {
  MatrixR br = to_real(b);
  return br.transpose() * g * br;
}

/// LLL on the columns of b (Gram gb = b^T G b). No swap is allowed between
/// positions boundary - 1 and boundary, so the first `boundary` columns keep
/// spanning the same sublattice.
void block_lll(MatrixZ& b, MatrixR& gb, Index boundary) {
  const Index n = b.cols();
  const Real delta = Real(99) / 100;
  const Real half = Real(1) / 2 + Real(1) / 1000000;
  Index k = 1;
  std::size_t guard = 0;
  while (k < n) {
    if (++guard > 10000000) throw ResourceLimit("LLL reduction did not terminate");
    Gso s = gso(gb);
    for (Index j = k - 1; j >= 0; --j) {
      if (bmp::abs(s.mu(k, j)) <= half) continue;
      Integer q = round_to_integer(s.mu(k, j));
      Real qr(q);
      b.col(k) -= q * b.col(j);
      gb.row(k) -= qr * gb.row(j);
      gb.col(k) -= qr * gb.col(j);
      for (Index l = 0; l < j; ++l) s.mu(k, l) -= qr * s.mu(j, l);
      s.mu(k, j) -= qr;
    }
    if (k != boundary && s.r(k) < (delta - s.mu(k, k - 1) * s.mu(k, k - 1)) * s.r(k - 1)) {
      b.col(k).swap(b.col(k - 1));
      gb.row(k).swap(gb.row(k - 1));
      gb.col(k).swap(gb.col(k - 1));
      k = std::max<Index>(k - 1, 1);
    } else {
      ++k;
    }
  }
}

/// Sign-normalized (last nonzero entry positive).
VectorZ normalized(VectorZ c) {
  for (Index i = c.size(); i-- > 0;) {
    if (c(i) != 0) {
      if (c(i) < 0) c = -c;
      break;
    }
  }
  return c;
}

bool tie_less(const VectorZ& a, const VectorZ& b) {
  for (Index i = a.size(); i-- > 0;) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

/// Schnorr-Euchner search for the shortest vectors whose coordinates
/// y_boundary..y_{n-1} are not all zero.
class Enumerator {
 public:
  Enumerator(const Gso& s, Index boundary, Real radius2, Real tol, std::size_t budget, std::size_t& nodes)
      : s_(s), n_(s.r.size()), boundary_(boundary), r2_(std::move(radius2)), tol_(std::move(tol)),
        budget_(budget), nodes_(nodes), y_(static_cast<std::size_t>(n_), 0) {}

  void run() { descend(n_ - 1, Real(0), true); }

  /// Coordinate vectors within the tie band of the best norm.
  std::vector<std::vector<long long>> winners() const {
    std::vector<std::vector<long long>> out;
    Real cut = best_ * (1 + tol_);
    for (const auto& [d, y] : found_)
      if (d <= cut) out.push_back(y);
    return out;
  }
  const Real& best() const { return best_; }
  bool any() const { return !found_.empty(); }

 private:
  void descend(Index level, const Real& above, bool zero_above) {
    if (level < boundary_ && zero_above) return;
    if (++nodes_ > budget_) throw ResourceLimit("enumeration exceeded its node budget");
    Real c = 0;
    for (Index j = level + 1; j < n_; ++j)
      if (y_[static_cast<std::size_t>(j)] != 0) c -= s_.mu(j, level) * Real(y_[static_cast<std::size_t>(j)]);
    // symmetric search space: the highest nonzero coordinate is positive
    long long lowest = zero_above ? (level == boundary_ ? 1 : 0) : std::numeric_limits<long long>::min();
    long long start = round_to_integer(c).convert_to<long long>();
    if (start < lowest) start = lowest;

    auto visit = [&](long long y) -> bool {
      Real diff = Real(y) - c;
      Real d = above + diff * diff * s_.r(level);
      if (d > r2_) return false;
      y_[static_cast<std::size_t>(level)] = y;
      if (level == 0) {
        record(d);
      } else {
        descend(level - 1, d, zero_above && y == 0);
      }
      return true;
    };

    // zigzag outward from the rounded center
    long long up = start, down = start - 1;
    bool up_open = true, down_open = down >= lowest;
    while (up_open || down_open) {
      bool take_up;
      if (!down_open)
        take_up = true;
      else if (!up_open)
        take_up = false;
      else
        take_up = bmp::abs(Real(up) - c) <= bmp::abs(Real(down) - c);
      if (take_up) {
        if (!visit(up)) up_open = false;
        ++up;
      } else {
        if (!visit(down)) down_open = false;
        --down;
        if (down < lowest) down_open = false;
      }
    }
    y_[static_cast<std::size_t>(level)] = 0;
  }

  void record(const Real& d) {
    if (found_.empty() || d < best_) best_ = d;
    found_.emplace_back(d, y_);
    Real shrunk = best_ * (1 + tol_);
    if (shrunk < r2_) r2_ = shrunk;
  }

  const Gso& s_;
  Index n_;
  Index boundary_;
  Real r2_;
  Real tol_;
  std::size_t budget_;
  std::size_t& nodes_;
  std::vector<long long> y_;
  Real best_;
  std::vector<std::pair<Real, std::vector<long long>>> found_;
};

nfield::FieldElement combine(const std::vector<nfield::FieldElement>& basis, const VectorZ& c,
                             const nfield::NumberField& field) {
  nfield::FieldElement x = field.zero();
  for (Index i = 0; i < c.size(); ++i)
    if (c(i) != 0) x = x + Rational(c(i)) * basis[static_cast<std::size_t>(i)];
  return x;
}

}  // namespace

MinimaResult successive_minima(const EmbeddingData& data, const MinimaOptions& options) {
  const Index n = data.gram.rows();
  if (n == 0) throw InvalidInput("empty lattice");
  PrecisionScope scope(data.precision);
  // Norms closer than the working-precision error count as ties; a band
  // relative to the requested accuracy would admit whole lines of distinct
  // vectors once the minima spread over many orders of magnitude.
  const int tie_bits = std::max<int>(static_cast<int>(data.requested), static_cast<int>(data.precision) - 64);
  const Real tie_tol = bmp::ldexp(Real(1), -tie_bits);
  const Real report_tol = bmp::ldexp(Real(1), -static_cast<int>(data.requested));

  MinimaResult result;
  result.precision = data.precision;
  MatrixZ witnesses(n, 0);

  for (Index k = 0; k < n; ++k) {
    MatrixZ b = k == 0 ? MatrixZ(MatrixZ::Identity(n, n)) : exact::saturating_completion(witnesses);
    MatrixR gb = congruence(b, data.gram);
    block_lll(b, gb, k);
    gb = congruence(b, data.gram);
    Gso s = gso(gb);

    Real r2 = gb(k, k);
    for (Index j = k + 1; j < n; ++j) r2 = std::min<Real>(r2, gb(j, j));
    r2 *= 1 + 2 * tie_tol;

    Enumerator e(s, k, r2, tie_tol, options.node_budget, result.nodes);
    e.run();
    if (!e.any()) throw PrecisionError("enumeration found no vector; precision too low");

    std::optional<VectorZ> pick;
    for (const auto& y : e.winners()) {
      VectorZ yz(n);
      for (Index i = 0; i < n; ++i) yz(i) = Integer(y[static_cast<std::size_t>(i)]);
      VectorZ c = normalized(b * yz);
      if (!pick || tie_less(c, *pick)) pick = c;
    }

    nfield::FieldElement x = combine(data.basis, *pick, data.field);
    Certified lambda = t2_norm(x, data.field, data.roots);
    lambda.rad += lambda.mid * report_tol;
    result.lambdas.push_back(lambda);
    result.coefficients.push_back(*pick);
    result.witnesses.push_back(x);
    witnesses.conservativeResize(n, k + 1);
    witnesses.col(k) = *pick;
  }
  return result;
}

MinimaResult successive_minima(const OrderBasis& order, unsigned bits) {
  return successive_minima(t2_gram(order.flag(), order.field(), bits));
}

MinimaResult successive_minima(const IdealBasis& ideal, unsigned bits) {
  return successive_minima(
      t2_gram(std::span<const FieldElement>(ideal.elements()), ideal.order().field(), bits));
}

}  // namespace succmin::lattice
