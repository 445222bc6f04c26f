#pragma once

// Tower types and mixed-radix digit arithmetic.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace succmin::radix {

/// Ordered tuple (n_1, ..., n_t) of relative degrees, every part >= 2.
class TowerType {
 public:
  explicit TowerType(std::vector<int> parts);

  /// Parses the comma-separated form, e.g. "2,4".
  static TowerType parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// n_1 * ... * n_s for s = 0..length (so prefix_degree(0) == 1).
  int prefix_degree(int s) const;

  std::string to_string() const;

  friend bool operator==(const TowerType&, const TowerType&) = default;
  friend auto operator<=>(const TowerType& a, const TowerType& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int degree_ = 1;
};

/// Mixed-radix digits, least significant first.
struct Digits {
  std::vector<int> values;
  friend bool operator==(const Digits&, const Digits&) = default;
};

/// All ordered factorizations of n into parts >= 2, lexicographically sorted.
std::vector<TowerType> tower_types(int n);

Digits to_mixed_radix(std::int64_t i, const TowerType& tower);
std::int64_t from_mixed_radix(const Digits& digits, const TowerType& tower);

/// True iff the digit-wise sum of i and j differs from the digits of i + j.
bool overflows(std::int64_t i, std::int64_t j, const TowerType& tower);

/// (i mod m) + (j mod m) == (i + j) mod m.
bool residue_condition(std::int64_t i, std::int64_t j, std::int64_t m);

/// residue_condition for every listed subfield degree. Every degree must
/// divide n; the set must contain 1 and n.
bool exthm_condition(std::int64_t i, std::int64_t j, const std::vector<int>& subfield_degrees, int n);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

}  // namespace succmin::radix
