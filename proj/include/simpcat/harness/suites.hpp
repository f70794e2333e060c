// Named verification suites over the instance corpus, and their reports.
#ifndef SIMPCAT_HARNESS_SUITES_HPP_
#define SIMPCAT_HARNESS_SUITES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "simpcat/harness/document.hpp"

namespace simpcat::harness {

enum class Verdict { Pass, Fail, BoundExceeded, Error };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct CheckRecord {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string provenance;  // where the expected value comes from
  std::string computed;
  Verdict verdict = Verdict::Error;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::string claim;
  std::vector<CheckRecord> checks;  // sorted by name

  bool passed() const;
  bool bound_exceeded() const;
};

// What a check body returns; the verdict is Pass when `pass` holds.
struct CheckOutcome {
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CheckSpec {
  std::string name;
  std::string inputs;
  std::string provenance;
  std::function<CheckOutcome()> run;
};

// In the order the acceptance criteria list them.
const std::vector<std::string>& suite_names();
// The claim a suite re-checks, in one line.
std::string suite_claim(const std::string& name);
// Throws InputError for an unknown suite.
std::vector<CheckSpec> suite_checks(const std::string& name, const HarnessConfig& config);

// Runs the checks in parallel and assembles the report ordered by check name.
SuiteReport run_suite(const std::string& name, const HarnessConfig& config);

// 0 when every suite passed, 1 on a failed or erroring check, else 3 when a
// bound was exceeded.
int exit_status(const std::vector<SuiteReport>& reports);

// Renderings; runtimes are left out unless asked for, so that reports with
// the same configuration are byte-identical.
json report_json(const std::vector<SuiteReport>& reports, const HarnessConfig& config, bool timings = false);
std::string report_text(const std::vector<SuiteReport>& reports, bool timings = false);
std::vector<SuiteReport> reports_from_json(const json& j);

}  // namespace simpcat::harness

#endif  // SIMPCAT_HARNESS_SUITES_HPP_
