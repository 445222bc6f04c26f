// Acceptance runner: one PASS/FAIL line per criterion, each within its time
// budget. Exit status is nonzero when any criterion fails.

#include "succmin/suites.hpp"

#include <cstdio>
#include <iostream>

using namespace succmin;

namespace {

struct Criterion {
  int id;
  const char* suite;
  double budget_seconds;
};

const Criterion kCriteria[] = {
    {1, "radix", 1},       {2, "lambda0", 60},         {3, "submult", 60},   {4, "minkowski", 120},
    {5, "exthm", 300},     {6, "counterexample", 600}, {7, "polytope", 300}, {8, "spectrum", 60},
    {9, "family", 600},    {10, "oracle", 120},        {11, "scrollar", 60},
};

}  // namespace

int main() {
  suites::Config cfg;
  int failed = 0;
  for (const auto& c : kCriteria) {
    suites::SuiteResult r;
    try {
      r = suites::run_suite(c.suite, cfg);
    } catch (const std::exception& e) {
      r.name = c.suite;
      r.summary = std::string("threw: ") + e.what();
    }
    const bool in_time = r.seconds <= c.budget_seconds;
    const bool ok = r.passed && in_time;
    failed += ok ? 0 : 1;
    std::printf("%s %2d %s: %s [%.2fs / %.0fs budget]\n", ok ? "PASS" : "FAIL", c.id, r.name.c_str(),
                r.summary.c_str(), r.seconds, c.budget_seconds);
    for (const auto& f : r.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
