#include "succmin/scrollar.hpp"

#include <algorithm>
#include <numeric>

namespace succmin::scrollar {

void validate(const SplittingType& s) {
  if (s.n < 1) throw InvalidInput("splitting type needs n >= 1");
  if (s.g < 0) throw InvalidInput("genus must be nonnegative");
  if (static_cast<int>(s.a.size()) != s.n)
    throw InvalidInput("splitting type needs " + std::to_string(s.n) + " entries");
  if (!std::is_sorted(s.a.begin(), s.a.end())) throw InvalidInput("splitting type must be sorted ascending");
  long sum = std::accumulate(s.a.begin(), s.a.end(), 0L);
  if (sum != s.g + s.n - 1 - s.degL)
    throw InvalidInput("sum of a_i is " + std::to_string(sum) + ", expected g + n - 1 - degL = " +
                       std::to_string(s.g + s.n - 1 - s.degL));
}

bool is_structure_sheaf(const SplittingType& s) { return s.degL == 0 && !s.a.empty() && s.a[0] == 0; }

namespace {

void require_structure_sheaf(const SplittingType& s) {
  validate(s);
  if (!is_structure_sheaf(s)) throw InvalidInput("expected the structure sheaf (degL = 0, a_0 = 0)");
}

}  // namespace

long h0(const SplittingType& s, long j) {
  long h = 0;
  for (long a : s.a) h += std::max(0L, j + 1 - a);
  return h;
}

H0Table h0_table(const SplittingType& s, long first, long last) {
  if (last < first) throw InvalidInput("empty range");
  H0Table t{first, {}};
  for (long j = first; j <= last; ++j) t.values.push_back(h0(s, j));
  return t;
}

std::vector<long> minima_from_h0(const H0Table& h, int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  if (h.values.size() < 2) throw InvalidInput("need at least two values of h");
  if (h.values.front() != 0) throw InvalidInput("h must vanish at the start of the range");
  std::vector<long> a;
  long prev = 0;
  for (std::size_t k = 0; k + 1 < h.values.size(); ++k) {
    long diff = h.values[k + 1] - h.values[k];
    if (diff < prev || diff > n) throw InvalidInput("differences of h must be nondecreasing and at most n");
    long j = h.first + static_cast<long>(k) + 1;
    for (long i = prev; i < diff; ++i) a.push_back(j);
    prev = diff;
  }
  if (prev != n) throw InvalidInput("range ends before every a_i is determined");
  return a;
}

bool maroni_check(const SplittingType& s) {
  require_structure_sheaf(s);
  return static_cast<long>(s.n) * s.a.back() <= 2 * s.g - 2 + 2 * s.n;
}

DpBounds dp_bounds(const SplittingType& s) {
  require_structure_sheaf(s);
  if (s.n < 2) throw InvalidInput("bounds on a_1 need n >= 2");
  DpBounds b;
  const long n = s.n;
  b.lower = Rational(s.g + n - 1, n * (n - 1) / 2);
  b.upper = Rational(s.g + n + 1, n - 1);
  Rational a1(s.a[1]);
  b.lower_holds = b.lower <= a1;
  b.upper_holds = a1 <= b.upper;
  return b;
}

bool dp_bounds_check(const SplittingType& s) { return dp_bounds(s).holds(); }

std::vector<Violation> scrollar_constraints(const SplittingType& s_o, const SplittingType& s_l,
                                            const nfield::FlagType& t) {
  validate(s_o);
  validate(s_l);
  if (s_o.n != s_l.n || t.degree() != s_o.n) throw InvalidInput("splitting types and flag type differ in degree");
  std::vector<Violation> out;
  for (int i = 0; i < s_o.n; ++i) {
    for (int j = 0; j < s_o.n; ++j) {
      int k = t(i, j);
      if (s_l.a[static_cast<std::size_t>(k)] > s_o.a[static_cast<std::size_t>(i)] + s_l.a[static_cast<std::size_t>(j)])
        out.push_back({i, j, k});
    }
  }
  return out;
}

nfield::FlagType tightest_flag_type(const SplittingType& s) {
  validate(s);
  const int n = s.n;
  Eigen::MatrixXi t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == 0 || j == 0) {
        t(i, j) = std::max(i, j);
        continue;
      }
      int k = std::max(i, j);
      long cap = s.a[static_cast<std::size_t>(i)] + s.a[static_cast<std::size_t>(j)];
      for (int m = n - 1; m > k; --m) {
        if (s.a[static_cast<std::size_t>(m)] <= cap) {
          k = m;
          break;
        }
      }
      t(i, j) = k;
    }
  }
  return nfield::FlagType(t);
}

VectorQ geometric_minkowski_type(const SplittingType& s) {
  require_structure_sheaf(s);
  const long denom = 2 * (s.g + s.n - 1);
  if (denom == 0) throw InvalidInput("g + n - 1 must be positive");
  VectorQ x(s.n - 1);
  for (int i = 1; i < s.n; ++i) x(i - 1) = Rational(s.a[static_cast<std::size_t>(i)], denom);
  return x;
}

}  // namespace succmin::scrollar
