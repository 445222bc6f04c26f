#include "succmin/radix.hpp"

#include "succmin/core.hpp"

#include <algorithm>
#include <charconv>

namespace succmin::radix {

TowerType::TowerType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidInput("tower type must have at least one part");
  for (int p : parts_) {
    if (p < 2) throw InvalidInput("tower type parts must be >= 2, got " + std::to_string(p));
    if (degree_ > (1 << 20) / p) throw InvalidInput("tower type degree too large");
    degree_ *= p;
  }
}

TowerType TowerType::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidInput("malformed tower type: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return TowerType(std::move(parts));
}

int TowerType::prefix_degree(int s) const {
  if (s < 0 || s > length()) throw RangeError("prefix index out of range");
  int d = 1;
  for (int k = 0; k < s; ++k) d *= parts_[static_cast<std::size_t>(k)];
  return d;
}

std::string TowerType::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

namespace {

void factorizations(int remaining, std::vector<int>& prefix, std::vector<TowerType>& out) {
  if (remaining == 1) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = 2; p <= remaining; ++p) {
    if (remaining % p) continue;
    prefix.push_back(p);
    factorizations(remaining / p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TowerType> tower_types(int n) {
  if (n < 2) throw InvalidInput("invalid degree " + std::to_string(n) + ": tower types need n >= 2");
  std::vector<TowerType> out;
  std::vector<int> prefix;
  factorizations(n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Digits to_mixed_radix(std::int64_t i, const TowerType& tower) {
  if (i < 0 || i >= tower.degree())
    throw RangeError("index " + std::to_string(i) + " outside [0, " + std::to_string(tower.degree()) + ")");
  Digits d;
  for (int p : tower.parts()) {
    d.values.push_back(static_cast<int>(i % p));
    i /= p;
  }
  return d;
}

std::int64_t from_mixed_radix(const Digits& digits, const TowerType& tower) {
  if (digits.values.size() != tower.parts().size()) throw RangeError("digit count does not match tower length");
  std::int64_t value = 0;
  std::int64_t place = 1;
  for (std::size_t s = 0; s < digits.values.size(); ++s) {
    int p = tower.parts()[s];
    int v = digits.values[s];
    if (v < 0 || v >= p) throw RangeError("digit " + std::to_string(v) + " outside [0, " + std::to_string(p) + ")");
    value += v * place;
    place *= p;
  }
  return value;
}

bool overflows(std::int64_t i, std::int64_t j, const TowerType& tower) {
  if (i < 0 || j < 0) throw RangeError("overflow test needs i, j >= 0");
  if (i + j >= tower.degree()) throw RangeError("overflow test needs i + j < degree");
  Digits di = to_mixed_radix(i, tower);
  Digits dj = to_mixed_radix(j, tower);
  Digits dk = to_mixed_radix(i + j, tower);
  for (std::size_t s = 0; s < di.values.size(); ++s)
    if (di.values[s] + dj.values[s] != dk.values[s]) return true;
  return false;
}

bool residue_condition(std::int64_t i, std::int64_t j, std::int64_t m) {
  if (m < 1) throw InvalidInput("invalid modulus " + std::to_string(m));
  if (i < 0 || j < 0) throw RangeError("residue condition needs i, j >= 0");
  return (i % m) + (j % m) == (i + j) % m;
}

bool exthm_condition(std::int64_t i, std::int64_t j, const std::vector<int>& subfield_degrees, int n) {
  if (n < 1) throw InvalidInput("invalid degree");
  bool has_one = false, has_n = false;
  for (int k : subfield_degrees) {
    if (k < 1 || n % k != 0)
      throw InvalidInput("subfield degree " + std::to_string(k) + " does not divide " + std::to_string(n));
    has_one |= (k == 1);
    has_n |= (k == n);
  }
  if (!has_one || !has_n) throw InvalidInput("subfield degrees must contain 1 and n");
  return std::all_of(subfield_degrees.begin(), subfield_degrees.end(),
                     [&](int k) { return residue_condition(i, j, k); });
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace succmin::radix
