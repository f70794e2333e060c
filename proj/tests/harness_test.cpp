#include <gtest/gtest.h>

#include <regex>

#include "simpcat/harness/compute.hpp"
#include "simpcat/harness/document.hpp"
#include "simpcat/harness/suites.hpp"

using namespace simpcat;
using namespace simpcat::harness;

namespace {

std::string data(const std::string& name) { return read_text(std::string(SIMPCAT_TEST_DATA) + "/" + name); }

template <class E>
std::string message_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const E& e) {
    return e.what();
  }
  ADD_FAILURE() << "no exception for " << text;
  return {};
}

std::string doc_with(const std::string& entities) {
  return R"({"schema": "simpcat/1", "entities": {)" + entities + "}}";
}

}  // namespace

TEST(Document, ConstructorsResolveAndAudit) {
  const auto doc = parse_document(doc_with(
      R"("d2": {"kind": "simplicial_set", "construct": "delta", "n": 2, "bound": 3},
         "b": {"kind": "bisimplicial_set", "construct": "dec", "of": "d2"})"));
  ASSERT_EQ(doc.entities.size(), 2u);
  const auto& x = std::get<SimplicialSet>(doc.entity("d2"));
  EXPECT_EQ(x.sizes(), (std::vector<int>{3, 6, 10, 15}));
  EXPECT_EQ(entity_kind(doc.entity("b")), entity_kind(Entity(BisimplicialSet{})));
}

TEST(Document, GoldenRoundTrip) {
  const std::string golden = data("workbench.golden.json");
  EXPECT_EQ(serialize_text(parse_document(data("workbench.in.json"))), golden);
  EXPECT_EQ(serialize_text(parse_document(golden)), golden);
}

TEST(Document, SerializeThenParseIsIdentity) {
  const std::vector<std::string> specs = {
      R"({"kind": "simplicial_set", "construct": "horn", "n": 3, "i": 1, "bound": 3})",
      R"({"kind": "simplicial_set", "construct": "sphere", "n": 2, "bound": 3, "pointed": true})",
      R"({"kind": "bisimplicial_set", "construct": "d_star", "of": {"kind": "simplicial_set", "construct": "delta", "n": 1, "bound": 3}})",
      R"({"kind": "category", "construct": "cyclic", "n": 3})",
      R"({"kind": "category", "construct": "product", "of": [{"kind": "category", "construct": "ordinal", "n": 1}, {"kind": "category", "construct": "chaotic", "n": 2}]})",
      R"({"kind": "simplicial_category", "construct": "rho", "of": {"kind": "simplicial_set", "construct": "delta", "n": 1, "bound": 3}})",
      R"({"kind": "simplicial_category", "construct": "suspend", "of": {"kind": "simplicial_category", "construct": "s0", "bound": 2}})",
      R"({"kind": "spectrum", "construct": "sigma_infinity", "of": {"kind": "simplicial_category", "construct": "s0", "bound": 2}, "length": 1})",
  };
  for (const auto& s : specs) {
    SCOPED_TRACE(s);
    const json once = serialize(parse_document(doc_with(R"("e": )" + s)));
    EXPECT_EQ(serialize(parse_document(once)), once);
  }
}

TEST(Document, BadFaceTableFailsWithWitness) {
  // s_0 sends vertex 1 to edge 1, but there is only one edge.
  const std::string m = message_of<AuditFailure>(doc_with(
      R"("x": {"kind": "simplicial_set", "bound": 1, "sizes": [2, 1],
               "faces": [[], [[0], [0]]], "degeneracies": [[[0, 1]], []]})"));
  EXPECT_NE(m.find("/entities/x"), std::string::npos) << m;
  EXPECT_NE(m.find("s_0"), std::string::npos) << m;
}

TEST(Document, SimplicialIdentityViolationNamesTheSimplex) {
  // s_0 of vertex 1 is edge 1, whose faces are both vertex 0.
  const std::string m = message_of<AuditFailure>(doc_with(
      R"("x": {"kind": "simplicial_set", "bound": 1, "sizes": [2, 2],
               "faces": [[], [[0, 0], [0, 0]]], "degeneracies": [[[0, 1]], []]})"));
  EXPECT_NE(m.find("/entities/x"), std::string::npos) << m;
}

TEST(Document, FaceIdentityViolationReportsTheWitnessPair) {
  // Δ¹ to degree 2 with d_0 of the 2-simplex (0, 0, 1) moved from edge (0, 1) to edge (1, 1).
  const std::string m = message_of<AuditFailure>(doc_with(
      R"("x": {"kind": "simplicial_set", "bound": 2, "sizes": [2, 3, 4],
               "faces": [[], [[0, 1, 1], [0, 0, 1]], [[0, 2, 2, 2], [0, 1, 1, 2], [0, 0, 1, 2]]],
               "degeneracies": [[[0, 2]], [[0, 1, 3], [0, 2, 3]], []]})"));
  EXPECT_NE(m.find("d_i d_j = d_{j-1} d_i fails at degree 2 (i=0, j=2) on simplex 1"), std::string::npos) << m;
}

TEST(Document, NonAssociativeCompositionRejected) {
  // "g" is Z/2. In "bad", 1 1 = 2 and 2 2 = 1 but 1 2 = 1, so (1 1) 2 = 2 2 = 1
  // while 1 (1 2) = 1 1 = 2.
  const std::string m = message_of<AuditFailure>(doc_with(
      R"("g": {"kind": "category", "objects": 1, "source": [0, 0], "target": [0, 0], "identity": [0],
               "compose": [[1, 1, 0]]},
         "bad": {"kind": "category", "objects": 1, "source": [0, 0, 0], "target": [0, 0, 0], "identity": [0],
               "compose": [[1, 1, 2], [1, 2, 1], [2, 1, 2], [2, 2, 1]]})"));
  EXPECT_NE(m.find("/entities/bad"), std::string::npos) << m;
}

TEST(Document, SyntaxErrorsCarryLineAndColumn) {
  const std::string m = message_of<InputError>("{\n \"schema\": \"simpcat/1\",\n \"entities\": {,}\n}");
  EXPECT_TRUE(std::regex_search(m, std::regex("line 3, column \\d+"))) << m;
}

TEST(Document, StructuralErrorsCarryPointers) {
  EXPECT_NE(message_of<InputError>(R"({"schema": "simpcat/0"})").find("/schema"), std::string::npos);
  EXPECT_NE(message_of<InputError>(R"({"schema": "simpcat/1", "extra": 1})").find("/extra"), std::string::npos);
  EXPECT_NE(message_of<InputError>(R"({"schema": "simpcat/1", "config": {"bound": 2, "colour": 1}})").find("/config/colour"),
            std::string::npos);
  EXPECT_NE(message_of<InputError>(R"({"schema": "simpcat/1", "requests": [{"op": "pi0", "of": "nope"}]})")
                .find("/requests/0/of"),
            std::string::npos);
  const std::string cyc = message_of<InputError>(doc_with(
      R"("a": {"kind": "bisimplicial_set", "construct": "dec", "of": "b"},
         "b": {"kind": "simplicial_set", "construct": "diag", "of": "a"})"));
  EXPECT_NE(cyc.find("cyclic"), std::string::npos) << cyc;
  const std::string typed = message_of<InputError>(doc_with(
      R"("c": {"kind": "category", "construct": "chaotic", "n": 2},
         "b": {"kind": "bisimplicial_set", "construct": "dec", "of": "c"})"));
  EXPECT_NE(typed.find("/entities/b/of"), std::string::npos) << typed;
}

TEST(Document, MapsAreAudited) {
  const std::string m = message_of<AuditFailure>(doc_with(
      R"("a": {"kind": "category", "construct": "ordinal", "n": 1},
         "c": {"kind": "category", "construct": "discrete", "n": 2}},
         "maps": {"f": {"kind": "functor", "source": "a", "target": "c", "objects": [0, 1], "morphisms": [0, 1, 0]})"));
  EXPECT_NE(m.find("/maps/f"), std::string::npos) << m;
}

TEST(Document, ConfigRoundTrips) {
  HarnessConfig c;
  c.bound = 5;
  c.cap = 77;
  c.rho = RhoChoice::PiDStar;
  EXPECT_EQ(config_from_json(config_to_json(c)), c);
}

TEST(Compute, RequestsMatchGolden) {
  const auto doc = parse_document(data("workbench.golden.json"));
  EXPECT_EQ(pretty(compute_requests(doc, doc.config)), data("workbench.requests.golden.json"));
}

TEST(Compute, HomologyOfCircleAndWrongKinds) {
  const auto doc = parse_document(doc_with(
      R"("s1": {"kind": "simplicial_set", "construct": "sphere", "n": 1, "bound": 3, "pointed": true},
         "c": {"kind": "category", "construct": "chaotic", "n": 2})"));
  const json h = compute(doc, {"homology", "s1", {}, 2}, doc.config).at("result");
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0]["group"], "Z");
  EXPECT_EQ(h[1]["group"], "Z");
  EXPECT_EQ(h[2]["group"], "0");
  EXPECT_EQ(compute(doc, {"pi1", "s1", {}, {}}, doc.config)["result"]["abelianization"]["group"], "Z");
  EXPECT_EQ(compute(doc, {"nerve", "c", {}, 1}, doc.config)["result"]["sizes"], json::parse("[2, 4]"));
  EXPECT_THROW(compute(doc, {"nerve", "s1", {}, {}}, doc.config), InputError);
  EXPECT_THROW(compute(doc, {"mapspace", "s1", {}, {}}, doc.config), InputError);
  EXPECT_THROW(compute(doc, {"frobnicate", "s1", {}, {}}, doc.config), InputError);
}

TEST(Compute, MappingSpaceFromTwoPoints) {
  // Pointed maps out of S⁰ pick one simplex of the target.
  const auto doc = parse_document(doc_with(
      R"("S0": {"kind": "simplicial_set", "construct": "two_point", "bound": 2, "pointed": true},
         "C": {"kind": "simplicial_category", "construct": "constant", "basepoint": 0,
               "of": {"kind": "category", "construct": "chaotic", "n": 2}, "bound": 2})"));
  const json r = compute(doc, {"mapspace", "S0", "C", 1}, doc.config)["result"];
  EXPECT_EQ(r["sizes"], json::parse("[2, 4]"));
}

TEST(Suites, RegistryAndUnknownNames) {
  EXPECT_EQ(suite_names().size(), 12u);
  for (const auto& n : suite_names()) EXPECT_FALSE(suite_claim(n).empty()) << n;
  EXPECT_THROW(suite_claim("no-such-suite"), InputError);
  EXPECT_THROW(run_suite("no-such-suite", HarnessConfig{}), InputError);
}

TEST(Suites, ChecksCarryProvenanceAndAreSortedByName) {
  HarnessConfig cfg;
  cfg.threads = 2;
  const SuiteReport r = run_suite("effective-mono", cfg);
  ASSERT_FALSE(r.checks.empty());
  EXPECT_TRUE(r.passed());
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    EXPECT_EQ(r.checks[k].provenance.front(), '[') << r.checks[k].name;
    if (k > 0) EXPECT_LT(r.checks[k - 1].name, r.checks[k].name);
  }
}

TEST(Suites, ReportsAreByteIdenticalAcrossRunsAndThreadCounts) {
  HarnessConfig one;
  one.threads = 1;
  HarnessConfig four = one;
  four.threads = 4;
  const std::vector<SuiteReport> a = {run_suite("diag-wbar", one), run_suite("k-theory", one)};
  const std::vector<SuiteReport> b = {run_suite("diag-wbar", four), run_suite("k-theory", four)};
  EXPECT_EQ(report_json(a, one).dump(), report_json(b, one).dump());
  EXPECT_EQ(report_text(a), report_text(b));
  EXPECT_EQ(report_json(a, one).dump().find("seconds"), std::string::npos);
}

TEST(Suites, ReportJsonRoundTrips) {
  const std::vector<SuiteReport> a = {run_suite("omega-probe", HarnessConfig{})};
  const json j = report_json(a, HarnessConfig{});
  EXPECT_EQ(report_json(reports_from_json(j), HarnessConfig{}), j);
  EXPECT_THROW(reports_from_json(json::parse(R"({"schema": "simpcat/1"})")), InputError);
}

TEST(Suites, ExitStatusPrecedence) {
  auto with = [](std::vector<Verdict> vs) {
    SuiteReport r;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      CheckRecord c;
      c.name = "c" + std::to_string(k);
      c.verdict = vs[k];
      r.checks.push_back(c);
    }
    return std::vector<SuiteReport>{r};
  };
  EXPECT_EQ(exit_status(with({Verdict::Pass, Verdict::Pass})), 0);
  EXPECT_EQ(exit_status(with({Verdict::Pass, Verdict::BoundExceeded})), 3);
  EXPECT_EQ(exit_status(with({Verdict::BoundExceeded, Verdict::Fail})), 1);
  EXPECT_EQ(exit_status(with({Verdict::Error})), 1);
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::BoundExceeded, Verdict::Error})
    EXPECT_EQ(parse_verdict(to_string(v)), v);
}
