#include "simpcat/harness/compute.hpp"

#include <algorithm>
#include <limits>

#include "simpcat/cat/operations.hpp"
#include "simpcat/homotopy/fundamental.hpp"
#include "simpcat/homotopy/homology.hpp"
#include "simpcat/spectra/ktheory.hpp"
#include "simpcat/sset/operations.hpp"

namespace simpcat::harness {

namespace {

json integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();  // beyond 64 bits: decimal digits
}

json group(const AbelianGroupDescriptor& g) {
  json j;
  j["group"] = g.to_string();
  j["free_rank"] = g.free_rank;
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(integer(d));
  j["torsion"] = std::move(t);
  return j;
}

json presented(const PresentedGroup& g) {
  json j;
  j["presentation"] = g.to_string();
  j["generators"] = g.names;
  j["relators"] = g.relators;  // letters ±(g + 1), negative for inverses
  return j;
}

[[noreturn]] void wrong_kind(const std::string& op, const std::string& name, const Entity& e) {
  throw InputError(op + ": entity '" + name + "' is a " + entity_kind(e) + ", which this op does not accept");
}

// The simplicial set an op reads: itself, diag of a bisimplicial set, or the
// diagonal nerve of a simplicial category.
SimplicialSet underlying(const std::string& op, const std::string& name, const Entity& e) {
  if (auto* x = std::get_if<SimplicialSet>(&e)) return *x;
  if (auto* b = std::get_if<BisimplicialSet>(&e)) return diag(*b);
  if (auto* c = std::get_if<SimplicialCategory>(&e)) return diag_nerve_iso(*c);
  wrong_kind(op, name, e);
}

}  // namespace

const std::vector<std::string>& compute_ops() {
  static const std::vector<std::string> ops = {"nerve", "diag",  "wbar",    "dec",     "dstar",
                                               "homology", "pi0", "pi1", "ktheory", "mapspace"};
  return ops;
}

json compute(const WorkbenchDocument& doc, const Request& r, const HarnessConfig& cfg) {
  const Entity& e = doc.entity(r.of);
  json out;
  out["op"] = r.op;
  out["of"] = r.of;
  if (r.with) out["with"] = *r.with;
  json& res = out["result"];
  if (r.op == "nerve") {
    auto* c = std::get_if<Category>(&e);
    if (!c) wrong_kind(r.op, r.of, e);
    res = to_json(nerve(*c, r.degree.value_or(cfg.bound)));
  } else if (r.op == "diag" || r.op == "wbar") {
    const bool d = r.op == "diag";
    if (auto* b = std::get_if<BisimplicialSet>(&e))
      res = to_json(d ? diag(*b) : wbar(*b, r.degree.value_or(-1)));
    else if (auto* c = std::get_if<SimplicialCategory>(&e))
      res = to_json(d ? diag_nerve_iso(*c, r.degree.value_or(-1)) : wbar_nerve_iso(*c, r.degree.value_or(-1)));
    else
      wrong_kind(r.op, r.of, e);
  } else if (r.op == "dec" || r.op == "dstar") {
    auto* x = std::get_if<SimplicialSet>(&e);
    if (!x) wrong_kind(r.op, r.of, e);
    res = to_json(r.op == "dec" ? dec(*x) : d_star(*x));
  } else if (r.op == "homology") {
    const SimplicialSet x = underlying(r.op, r.of, e);
    const int top = std::min(r.degree.value_or(cfg.degree), x.bound() - 1);
    if (top < 0) throw InputError("homology: '" + r.of + "' has no 1-simplices to certify H_0");
    res = json::array();
    for (const auto& h : homology_up_to(x, top)) res.push_back(group(h));
  } else if (r.op == "pi0") {
    const SimplicialSet x = underlying(r.op, r.of, e);
    const Components c = pi0(x);
    res["components"] = c.count;
    res["labels"] = c.label;
  } else if (r.op == "pi1") {
    const SimplicialSet x = underlying(r.op, r.of, e);
    if (x.size(0) == 0) throw InputError("pi1: '" + r.of + "' is empty");
    const int v = x.basepoint().value_or(0);
    const PresentedGroup g = edge_path_group(x, v);
    res = presented(g);
    res["basepoint"] = v;
    res["abelianization"] = group(abelianization(g));
  } else if (r.op == "ktheory") {
    auto* c = std::get_if<SimplicialCategory>(&e);
    if (!c) wrong_kind(r.op, r.of, e);
    const KReport k = k_groups(*c, r.degree.value_or(cfg.degree));
    res["K0_components"] = k.components;
    res["basepoint_component"] = k.basepoint_class;
    res["K1"] = presented(k.pi1);
    res["K1_abelian"] = group(k.pi1_abelian);
    res["H1_basepoint_component"] = group(k.h1_basepoint);
    json hs = json::array();
    for (std::size_t i = 0; i < k.higher_homology.size(); ++i) {
      json h = group(k.higher_homology[i]);
      h["degree"] = static_cast<int>(i) + 2;
      hs.push_back(std::move(h));
    }
    res["higher_homology"] = std::move(hs);
    res["hurewicz_consistent"] = k.consistent();
    res["caveat"] = k.caveat;
  } else if (r.op == "mapspace") {
    auto* x = std::get_if<SimplicialSet>(&e);
    if (!x) wrong_kind(r.op, r.of, e);
    if (!r.with) throw InputError("mapspace: needs a target simplicial category (with)");
    const Entity& t = doc.entity(*r.with);
    auto* c = std::get_if<SimplicialCategory>(&t);
    if (!c) wrong_kind(r.op, *r.with, t);
    const int dim = std::max(x->dimension(), 0);
    const int n = r.degree.value_or(std::max(0, std::min({cfg.degree, c->bound() - dim, x->bound() - dim})));
    if (x->bound() < dim + n)
      throw InputError("mapspace: '" + r.of + "' is given to degree " + std::to_string(x->bound()) + ", need " +
                       std::to_string(dim + n));
    const MappingSpace m = mapping_space(*x, *c, n, cfg.cap);
    res["sizes"] = m.space.sizes();
    res["space"] = to_json(m.space);
  } else {
    throw InputError("unknown compute op '" + r.op + "'");
  }
  return out;
}

json compute_requests(const WorkbenchDocument& doc, const HarnessConfig& config) {
  json out = json::array();
  for (const auto& r : doc.requests) out.push_back(compute(doc, r, config));
  return out;
}

}  // namespace simpcat::harness
