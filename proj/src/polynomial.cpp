#include "succmin/polynomial.hpp"

#include <algorithm>

namespace succmin::poly {

namespace {

void trim(PolyQ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mod_remainder(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  std::uint64_t inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t f = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = (a[shift + k] + p - mulmod(f, b[k], p)) % p;
    trim(a);
  }
  return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_remainder(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly mod_mulrem(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  return mod_remainder(std::move(prod), f, p);
}

ModPoly mod_powrem(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
  ModPoly r{1};
  base = mod_remainder(base, f, p);
  while (e) {
    if (e & 1) r = mod_mulrem(r, base, f, p);
    base = mod_mulrem(base, base, f, p);
    e >>= 1;
  }
  return r;
}

ModPoly mod_derivative(const ModPoly& f, std::uint64_t p) {
  ModPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(mulmod(f[k], k % p, p));
  trim(d);
  return d;
}

ModPoly mod_quotient(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  std::uint64_t inv = powmod(b.back(), p - 2, p);
  ModPoly q(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    std::uint64_t f = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - 1 - db;
    q[shift] = f;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = (a[shift + k] + p - mulmod(f, b[k], p)) % p;
    trim(a);
  }
  return q;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

int degree(const PolyQ& f) {
  for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k)
    if (f[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

PolyQ to_rational(const PolyZ& f) {
  PolyQ out;
  for (const auto& c : f) out.emplace_back(c);
  trim(out);
  return out;
}

PolyQ derivative(const PolyQ& f) {
  PolyQ d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * Rational(static_cast<long>(k)));
  trim(d);
  return d;
}

PolyQ remainder(PolyQ a, const PolyQ& b) {
  trim(a);
  PolyQ bb = b;
  trim(bb);
  if (bb.empty()) throw InvalidInput("polynomial division by zero");
  const std::size_t db = bb.size() - 1;
  while (a.size() >= bb.size()) {
    Rational f = a.back() / bb.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= f * bb[k];
    trim(a);
  }
  return a;
}

PolyQ gcd(PolyQ a, PolyQ b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyQ r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

bool is_squarefree(const PolyZ& f) {
  PolyQ fq = to_rational(f);
  return degree(gcd(fq, derivative(fq))) == 0;
}

std::vector<int> factor_degrees_mod_p(const PolyZ& f, std::uint64_t p) {
  ModPoly fp;
  for (const auto& c : f) {
    Integer r = c % Integer(p);
    if (r < 0) r += Integer(p);
    fp.push_back(r.convert_to<std::uint64_t>());
  }
  trim(fp);
  if (fp.size() != f.size()) return {};  // leading coefficient vanished
  if (mod_gcd(fp, mod_derivative(fp, p), p).size() != 1) return {};
  // make monic
  std::uint64_t inv = powmod(fp.back(), p - 2, p);
  for (auto& c : fp) c = mulmod(c, inv, p);

  std::vector<int> degrees;
  ModPoly rest = fp;
  ModPoly xpow{0, 1};  // x^{p^i} mod rest
  int i = 0;
  while (rest.size() - 1 >= 2 * static_cast<std::size_t>(i + 1)) {
    ++i;
    xpow = mod_powrem(xpow, p, rest, p);
    ModPoly diff = xpow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    ModPoly g = mod_gcd(rest, diff, p);
    std::size_t gdeg = g.empty() ? 0 : g.size() - 1;
    if (gdeg > 0) {
      for (std::size_t c = 0; c < gdeg / static_cast<std::size_t>(i); ++c) degrees.push_back(i);
      rest = mod_quotient(rest, g, p);
      xpow = mod_remainder(xpow, rest, p);
    }
  }
  if (rest.size() > 1) degrees.push_back(static_cast<int>(rest.size() - 1));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

Irreducibility check_irreducible(const PolyZ& f, int prime_count) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return Irreducibility::Certified;
  // possible degrees of a proper rational factor
  std::set<int> possible;
  for (int d = 1; d < n; ++d) possible.insert(d);
  int used = 0;
  for (std::uint64_t p = 2; used < prime_count && p < 100000; ++p) {
    if (!is_prime(p)) continue;
    std::vector<int> degs = factor_degrees_mod_p(f, p);
    if (degs.empty()) continue;
    ++used;
    std::set<int> sums{0};
    for (int d : degs) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + d);
      sums = std::move(next);
    }
    std::set<int> kept;
    for (int d : possible)
      if (sums.count(d)) kept.insert(d);
    possible = std::move(kept);
    if (possible.empty()) return Irreducibility::Certified;
  }
  return Irreducibility::Unverified;
}

}  // namespace succmin::poly
