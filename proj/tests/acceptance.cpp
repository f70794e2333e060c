// Runs the twelve acceptance criteria through their verification suites and
// prints one PASS/FAIL line per criterion. A criterion passes when every check
// of its suite passes within the time budget.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "simpcat/harness/suites.hpp"

using namespace simpcat::harness;

int main() {
  struct Criterion {
    int number;
    const char* suite;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {1, "identities", 60},        {2, "c-sigma-contractibility", 60}, {3, "acyclic-cofibrations", 120},
      {4, "niso-pushout", 120},     {5, "diag-wbar", 120},              {6, "unit", 120},
      {7, "effective-mono", 30},    {8, "suspension-ladder", 180},      {9, "mapping-space", 60},
      {10, "k-theory", 60},         {11, "omega-probe", 60},            {12, "directed-colimit", 60},
  };
  const HarnessConfig config;
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport r = run_suite(c.suite, config);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int passed = 0;
    for (const auto& k : r.checks) passed += k.verdict == Verdict::Pass;
    const bool in_time = elapsed <= c.budget_seconds;
    const bool ok = r.passed() && !r.checks.empty() && in_time;
    failed += !ok;
    std::printf("%s criterion %2d  %-24s %3d/%-3zu checks  %7.2f s (budget %.0f s)\n", ok ? "PASS" : "FAIL", c.number,
                c.suite, passed, r.checks.size(), elapsed, c.budget_seconds);
    for (const auto& k : r.checks)
      if (k.verdict != Verdict::Pass)
        std::printf("     %s %s: expected %s, computed %s\n", to_string(k.verdict).c_str(), k.name.c_str(),
                    k.expected.c_str(), k.computed.c_str());
    if (!in_time) std::printf("     over the time budget\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
