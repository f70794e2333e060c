// simpcat: build documents, run computations, verify suites, render reports.
//
// Exit status: 0 pass, 1 a check failed, 2 input error, 3 bound exceeded.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simpcat/harness/compute.hpp"
#include "simpcat/harness/document.hpp"
#include "simpcat/harness/suites.hpp"

using namespace simpcat;
using namespace simpcat::harness;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kBound = 3;

struct Options {
  int bound = 0;
  int closure_bound = 0;
  std::uint64_t cap = 0;
  int degree = 0;
  std::string rho;
  bool pointed = false;
  std::string out;
  int threads = 0;
};

// Command-line flags override the document configuration.
HarnessConfig configure(HarnessConfig c, const CLI::App& app, const Options& o) {
  if (app.count("--bound")) c.bound = o.bound;
  if (app.count("--closure-bound")) c.closure_bound = o.closure_bound;
  if (app.count("--cap")) c.cap = o.cap;
  if (app.count("--degree")) c.degree = o.degree;
  if (app.count("--rho")) c.rho = parse_rho(o.rho);
  if (app.count("--threads")) c.threads = o.threads;
  return c;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
}

std::string dump(const json& j) { return pretty(j); }

const std::map<std::string, std::string>& kind_aliases() {
  static const std::map<std::string, std::string> m = {
      {"sset", "simplicial_set"},     {"simplicial_set", "simplicial_set"},
      {"biset", "bisimplicial_set"},  {"bisimplicial_set", "bisimplicial_set"},
      {"category", "category"},       {"cat", "category"},
      {"scat", "simplicial_category"}, {"simplicial_category", "simplicial_category"},
      {"spectrum", "spectrum"},
  };
  return m;
}

json split_list(const std::string& s) {
  json a = json::array();
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) a.push_back(part);
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simpcat: simplicial categories workbench"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--bound", o.bound, "simplicial bound")->check(CLI::NonNegativeNumber);
  app.add_option("--closure-bound", o.closure_bound, "morphism limit for word closures")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "enumeration limit per search");
  app.add_option("--degree", o.degree, "homology degree")->check(CLI::NonNegativeNumber);
  app.add_option("--rho", o.rho, "rho construction")->check(CLI::IsMember({"dstar", "dec"}));
  app.add_flag("--pointed", o.pointed, "basepoint at vertex 0 (build)");
  app.add_option("--out", o.out, "output file");
  app.add_option("--threads", o.threads, "worker threads for suites (0: all cores)")->check(CLI::NonNegativeNumber);

  // build
  auto* build = app.add_subcommand("build", "construct an entity and write it as an explicit document");
  std::string b_kind, b_construct, b_name = "x", b_into, b_spec, b_of, b_sigma;
  int b_n = 0, b_i = 0, b_length = 0;
  build->add_option("kind", b_kind, "sset | biset | category | scat | spectrum");
  build->add_option("construct", b_construct, "constructor, e.g. delta, chaotic, s0, rho");
  build->add_option("--n", b_n, "dimension or size parameter");
  build->add_option("--i", b_i, "horn index");
  build->add_option("--of", b_of, "operand entity names, comma separated (from --into)");
  build->add_option("--sigma", b_sigma, "ordinal map, comma separated");
  build->add_option("--length", b_length, "spectrum length");
  build->add_option("--name", b_name, "entity name");
  build->add_option("--into", b_into, "existing document to add the entity to");
  build->add_option("--spec", b_spec, "entity as inline JSON, instead of kind/construct");

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "run one computation on a document entity");
  std::string c_op, c_doc, c_of, c_with;
  std::vector<std::string> ops = compute_ops();
  ops.push_back("requests");
  compute_cmd->add_option("op", c_op, "operation")->required()->check(CLI::IsMember(ops));
  compute_cmd->add_option("document", c_doc, "document file, or - for stdin")->required();
  compute_cmd->add_option("--of", c_of, "entity name (default: the only entity)");
  compute_cmd->add_option("--with", c_with, "second entity (mapspace target)");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> v_suites;
  std::string v_doc;
  bool v_all = false, v_json = false, v_timings = false, v_list = false;
  verify->add_option("suites", v_suites, "suite names");
  verify->add_flag("--all", v_all, "every suite");
  verify->add_option("--doc", v_doc, "document supplying configuration and suite selection");
  verify->add_flag("--json", v_json, "print the JSON report instead of text");
  verify->add_flag("--timings", v_timings, "include runtimes (not byte-reproducible)");
  verify->add_flag("--list", v_list, "list suites and claims");

  // report
  auto* report = app.add_subcommand("report", "render a saved JSON report");
  std::string r_file;
  bool r_json = false, r_timings = false;
  report->add_option("file", r_file, "report file, or - for stdin")->required();
  report->add_flag("--json", r_json, "re-emit as JSON");
  report->add_flag("--timings", r_timings, "include stored runtimes");

  for (auto* s : {build, compute_cmd, verify, report}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*build) {
      json root;
      if (!b_into.empty()) root = serialize(parse_document(read_text(b_into)));
      else root["schema"] = kSchema;
      if (b_kind.empty() && b_spec.empty()) {
        // No new entity: rewrite --into in explicit form.
        if (b_into.empty()) throw InputError("build: give kind and constructor, --spec, or --into");
        emit(pretty(root), o.out);
        return kPass;
      }
      json spec;
      if (!b_spec.empty()) {
        try {
          spec = json::parse(b_spec);
        } catch (const nlohmann::json::parse_error& e) {
          throw InputError(std::string("--spec: ") + e.what());
        }
      } else {
        auto k = kind_aliases().find(b_kind);
        if (k == kind_aliases().end()) throw InputError("build: unknown kind '" + b_kind + "'");
        if (b_construct.empty()) throw InputError("build: missing constructor");
        const HarnessConfig cfg = configure(HarnessConfig{}, app, o);
        spec["kind"] = k->second;
        spec["construct"] = b_construct;
        spec["bound"] = cfg.bound;
        if (build->count("--n")) spec["n"] = b_n;
        if (build->count("--i")) spec["i"] = b_i;
        if (build->count("--length")) spec["length"] = b_length;
        if (app.count("--degree")) spec["degree"] = o.degree;
        if (app.count("--rho")) spec["rho"] = o.rho;
        if (!b_sigma.empty()) {
          json s = json::array();
          for (const auto& v : split_list(b_sigma)) s.push_back(std::stoi(v.get<std::string>()));
          spec["sigma"] = s;
        }
        if (!b_of.empty()) {
          json of = split_list(b_of);
          spec["of"] = of.size() == 1 ? of[0] : of;
        }
        if (o.pointed) spec["pointed"] = true;
      }
      if (root.contains("entities") && root["entities"].contains(b_name))
        throw InputError("build: entity '" + b_name + "' already exists");
      root["entities"][b_name] = spec;
      if (app.count("--bound") || app.count("--closure-bound") || app.count("--cap") || app.count("--degree") ||
          app.count("--rho")) {
        HarnessConfig base = root.contains("config") ? config_from_json(root["config"]) : HarnessConfig{};
        root["config"] = config_to_json(configure(base, app, o));
      }
      emit(serialize_text(parse_document(root)), o.out);
      return kPass;
    }

    if (*compute_cmd) {
      const WorkbenchDocument doc = parse_document(read_text(c_doc));
      const HarnessConfig cfg = configure(doc.config, app, o);
      if (c_op == "requests") {
        emit(dump(compute_requests(doc, cfg)), o.out);
        return kPass;
      }
      Request r{c_op, c_of, {}, {}};
      if (r.of.empty()) {
        if (doc.entities.size() != 1) throw InputError("compute: --of is required when the document has " +
                                                      std::to_string(doc.entities.size()) + " entities");
        r.of = doc.entities.begin()->first;
      }
      if (!c_with.empty()) r.with = c_with;
      emit(dump(compute(doc, r, cfg)), o.out);
      return kPass;
    }

    if (*verify) {
      if (v_list) {
        for (const auto& s : suite_names()) std::cout << s << "\t" << suite_claim(s) << "\n";
        return kPass;
      }
      HarnessConfig base;
      std::vector<std::string> names = v_suites;
      if (!v_doc.empty()) {
        const WorkbenchDocument doc = parse_document(read_text(v_doc));
        base = doc.config;
        if (names.empty()) names = doc.suites;
      }
      if (v_all || names.empty()) names = suite_names();
      for (const auto& n : names) suite_claim(n);  // rejects unknown names before running anything
      const HarnessConfig cfg = configure(base, app, o);
      std::vector<SuiteReport> reports;
      for (const auto& n : names) reports.push_back(run_suite(n, cfg));
      const json j = report_json(reports, cfg, v_timings);
      if (!o.out.empty()) emit(dump(j), o.out);
      std::cout << (v_json ? dump(j) : report_text(reports, v_timings));
      return exit_status(reports);
    }

    if (*report) {
      json j;
      try {
        j = json::parse(read_text(r_file));
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(r_file + ": " + e.what());
      }
      const std::vector<SuiteReport> reports = reports_from_json(j);
      const HarnessConfig cfg = j.contains("config") ? config_from_json(j["config"]) : HarnessConfig{};
      emit(r_json ? dump(report_json(reports, cfg, r_timings)) : report_text(reports, r_timings), o.out);
      return exit_status(reports);
    }
  } catch (const BoundExceeded& e) {
    std::cerr << "simpcat: bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const AuditFailure& e) {
    std::cerr << "simpcat: audit failure: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "simpcat: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "simpcat: bad number: " << e.what() << "\n";
    return kInput;
  }
  return kFail;
}
