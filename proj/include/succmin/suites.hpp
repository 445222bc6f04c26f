#pragma once

// Property suites over sampled orders, polytopes and splitting types. Each
// suite returns a pass/fail summary; the CLI `verify` command and the
// acceptance runner share them.

#include "succmin/lattice.hpp"

#include <chrono>
#include <cstdint>

namespace succmin::suites {

/// Every tolerance and default used by the suites and the CLI.
struct Config {
  unsigned precision = 128;
  double verdict_band = 1e-9;  // relative band treated as inconclusive
  double value_tol = 1e-9;     // numeric agreement of minima and norms
  double slope_band = 0.10;    // relative band around the expected slope
  double type_band = 0.05;     // max-norm band for the deg-8 Minkowski type
  double family_band = 0.02;   // max-norm band for family convergence
  std::uint64_t seed = 20240611;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string summary;
  std::vector<std::string> failures;  // first few offending cases
  double seconds = 0;
};

SuiteResult overflow_residue(const Config& cfg, int max_n = 24);
SuiteResult lambda_zero(const Config& cfg, int samples = 56);
SuiteResult submultiplicativity(const Config& cfg, int pairs = 1000);
SuiteResult minkowski(const Config& cfg, int samples = 56);
SuiteResult exthm(const Config& cfg);
SuiteResult counterexample(const Config& cfg);
SuiteResult polytope_identities(const Config& cfg, int max_n = 8);
SuiteResult spectrum_deg8(const Config& cfg);
SuiteResult family_convergence(const Config& cfg);
SuiteResult minima_oracle(const Config& cfg);
SuiteResult scrollar(const Config& cfg, int max_n = 8, long max_g = 40);

// ---------------------------------------------------------------------------
// Counterexample pipeline in degree 8.

struct Deg8Row {
  Integer M;
  bool is_order = false;
  Rational discriminant;
  std::vector<lattice::Certified> lambdas;
  Real ratio;  // lambda_3^2 / lambda_6
  radix::TowerType tower{std::vector<int>{8}};
  std::vector<Real> minkowski_type;
  lattice::InequalityCheck check_336;
};

struct Deg8Report {
  std::vector<Deg8Row> rows;
  Real slope;  // least-squares slope of log ratio against log M
  bool slope_ok = false, orders_ok = false, tower_ok = false, type_ok = false;
  double type_error = 0;  // max-norm distance to (4,5,5,8,8,12,12)/108 at the largest M
};

std::vector<Integer> default_deg8_m_values();
Deg8Report counterexample_deg8(const std::vector<Integer>& m_values, const Config& cfg);

/// Names accepted by run_suite, in execution order.
std::vector<std::string> suite_names();
/// Throws InvalidInput for an unknown name.
SuiteResult run_suite(const std::string& name, const Config& cfg);

}  // namespace succmin::suites
