// The workbench document: named entities, named maps, requested computations,
// suite selections and the bounds configuration, stored as versioned JSON.
// See docs/document-schema.md.
#ifndef SIMPCAT_HARNESS_DOCUMENT_HPP_
#define SIMPCAT_HARNESS_DOCUMENT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "simpcat/cat/category.hpp"
#include "simpcat/scat/levelwise.hpp"
#include "simpcat/scat/simplicial_category.hpp"
#include "simpcat/spectra/spectrum.hpp"
#include "simpcat/sset/bisimplicial.hpp"
#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "simpcat/1";

struct HarnessConfig {
  int bound = 3;                 // simplicial bound of the pointed corpus
  int closure_bound = 4096;      // morphism limit for word closures
  std::uint64_t cap = 1000000;   // enumeration limit per search
  int degree = 2;                // homology degree checked by the suites
  RhoChoice rho = RhoChoice::PiDec;
  int threads = 0;               // 0: hardware concurrency

  friend bool operator==(const HarnessConfig&, const HarnessConfig&) = default;
};

using Entity = std::variant<SimplicialSet, BisimplicialSet, Category, SimplicialCategory, SpectrumObject>;
using MapValue = std::variant<SimplicialMap, Functor, SimplicialFunctor>;

struct NamedMap {
  std::string source;
  std::string target;
  MapValue value;
};

// A computation requested by the document, run by `simpcat compute requests`.
struct Request {
  std::string op;                  // nerve, diag, wbar, dec, dstar, homology, pi0, pi1, ktheory, mapspace
  std::string of;                  // entity name
  std::optional<std::string> with; // second entity (mapspace target)
  std::optional<int> degree;
};

struct WorkbenchDocument {
  std::map<std::string, Entity> entities;
  std::map<std::string, NamedMap> maps;
  std::vector<Request> requests;
  std::vector<std::string> suites;
  HarnessConfig config;

  const Entity& entity(const std::string& name) const;
};

std::string entity_kind(const Entity& e);

// Parses, resolves references and constructors, and audits every entity and
// map. Throws InputError with a line/column or JSON-pointer location, or
// AuditFailure naming the entity and the violated identity.
WorkbenchDocument parse_document(const std::string& text);
WorkbenchDocument parse_document(const json& j);

// Explicit (table) form of every entity; parse_document of the result gives
// back an equal document.
json serialize(const WorkbenchDocument& doc);
std::string serialize_text(const WorkbenchDocument& doc);

// One-space indentation with arrays of scalars kept on one line.
std::string pretty(const json& j);

json to_json(const SimplicialSet& x);
json to_json(const BisimplicialSet& b);
json to_json(const Category& c);
json to_json(const SimplicialCategory& c);
json to_json(const SpectrumObject& s);
json to_json(const Entity& e);

json config_to_json(const HarnessConfig& c);
HarnessConfig config_from_json(const json& j, const std::string& where = "/config");

// Reads a whole file (or stdin for "-"); throws InputError when unreadable.
std::string read_text(const std::string& path);

}  // namespace simpcat::harness

#endif  // SIMPCAT_HARNESS_DOCUMENT_HPP_
