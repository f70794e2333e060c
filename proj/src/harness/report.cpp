#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "simpcat/harness/suites.hpp"

namespace simpcat::harness {

namespace {

CheckRecord run_check(const CheckSpec& spec) {
  CheckRecord r;
  r.name = spec.name;
  r.inputs = spec.inputs;
  r.provenance = spec.provenance;
  const auto start = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = spec.run();
    r.expected = std::move(o.expected);
    r.computed = std::move(o.computed);
    r.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
  } catch (const BoundExceeded& e) {
    r.computed = std::string("bound exceeded: ") + e.what();
    r.verdict = Verdict::BoundExceeded;
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
    r.verdict = Verdict::Error;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::BoundExceeded:
      return "bound-exceeded";
    case Verdict::Error:
      break;
  }
  return "error";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::BoundExceeded, Verdict::Error})
    if (to_string(v) == s) return v;
  throw InputError("unknown verdict '" + s + "'");
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.verdict == Verdict::Pass; });
}

bool SuiteReport::bound_exceeded() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.verdict == Verdict::BoundExceeded; });
}

SuiteReport run_suite(const std::string& name, const HarnessConfig& config) {
  SuiteReport report;
  report.suite = name;
  report.claim = suite_claim(name);
  const std::vector<CheckSpec> specs = suite_checks(name, config);
  report.checks.resize(specs.size());
  unsigned threads = config.threads > 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, specs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < specs.size();) report.checks[k] = run_check(specs[k]);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return report;
}

int exit_status(const std::vector<SuiteReport>& reports) {
  bool bound = false;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      if (c.verdict == Verdict::Fail || c.verdict == Verdict::Error) return 1;
      if (c.verdict == Verdict::BoundExceeded) bound = true;
    }
  return bound ? 3 : 0;
}

json report_json(const std::vector<SuiteReport>& reports, const HarnessConfig& config, bool timings) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "report";
  j["config"] = config_to_json(config);
  j["exit_status"] = exit_status(reports);
  json suites = json::array();
  for (const auto& r : reports) {
    json s;
    s["suite"] = r.suite;
    s["claim"] = r.claim;
    s["verdict"] = r.passed() ? "pass" : "fail";
    s["passed"] = std::count_if(r.checks.begin(), r.checks.end(),
                                [](const CheckRecord& c) { return c.verdict == Verdict::Pass; });
    s["total"] = r.checks.size();
    json checks = json::array();
    for (const auto& c : r.checks) {
      json e;
      e["name"] = c.name;
      e["inputs"] = c.inputs;
      e["expected"] = c.expected;
      e["provenance"] = c.provenance;
      e["computed"] = c.computed;
      e["verdict"] = to_string(c.verdict);
      if (timings) e["seconds"] = c.seconds;
      checks.push_back(std::move(e));
    }
    s["checks"] = std::move(checks);
    suites.push_back(std::move(s));
  }
  j["suites"] = std::move(suites);
  return j;
}

std::string report_text(const std::vector<SuiteReport>& reports, bool timings) {
  std::ostringstream os;
  for (const auto& r : reports) {
    const auto passed = std::count_if(r.checks.begin(), r.checks.end(),
                                      [](const CheckRecord& c) { return c.verdict == Verdict::Pass; });
    double total = 0;
    for (const auto& c : r.checks) total += c.seconds;
    os << "== " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size()
       << " checks";
    if (timings) os << ", " << seconds(total) << " of check time";
    os << ")\n   " << r.claim << "\n";
    for (const auto& c : r.checks) {
      std::string v = to_string(c.verdict);
      std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return std::toupper(ch); });
      os << "  " << v << "  " << c.name << ": " << c.computed;
      if (timings) os << " (" << seconds(c.seconds) << ")";
      os << "\n";
      if (c.verdict != Verdict::Pass) {
        os << "        inputs:   " << c.inputs << "\n";
        os << "        expected: " << c.expected << " " << c.provenance << "\n";
      }
    }
  }
  return os.str();
}

std::vector<SuiteReport> reports_from_json(const json& j) {
  std::vector<SuiteReport> out;
  try {
    if (j.at("schema").get<std::string>() != kSchema || j.at("kind").get<std::string>() != "report")
      throw InputError("not a simpcat/1 report");
    for (const auto& s : j.at("suites")) {
      SuiteReport r;
      r.suite = s.at("suite").get<std::string>();
      r.claim = s.at("claim").get<std::string>();
      for (const auto& c : s.at("checks")) {
        CheckRecord rec;
        rec.name = c.at("name").get<std::string>();
        rec.inputs = c.at("inputs").get<std::string>();
        rec.expected = c.at("expected").get<std::string>();
        rec.provenance = c.at("provenance").get<std::string>();
        rec.computed = c.at("computed").get<std::string>();
        rec.verdict = parse_verdict(c.at("verdict").get<std::string>());
        rec.seconds = c.value("seconds", 0.0);
        r.checks.push_back(std::move(rec));
      }
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace simpcat::harness
