#include "simpcat/harness/document.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "simpcat/cat/operations.hpp"
#include "simpcat/cat/presented.hpp"
#include "simpcat/scat/pointed.hpp"
#include "simpcat/sset/operations.hpp"
#include "simpcat/sset/standard.hpp"

namespace simpcat::harness {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t k) { return where + "/" + std::to_string(k); }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

template <class T>
T as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

template <class T>
T get(const json& j, const std::string& key, const std::string& where) {
  return as<T>(field(j, key, where), at(where, key));
}

template <class T>
std::optional<T> get_opt(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) return std::nullopt;
  return as<T>(j.at(key), at(where, key));
}

FunctorMap functor_map_from(const json& j, const std::string& where) {
  return {get<std::vector<int>>(j, "objects", where), get<std::vector<int>>(j, "morphisms", where)};
}

json functor_map_json(const FunctorMap& f) {
  json j;
  j["objects"] = f.objects;
  j["morphisms"] = f.morphisms;
  return j;
}

[[noreturn]] void audit_failed(const std::string& what, const std::vector<std::string>& witnesses) {
  std::string msg = what;
  for (const auto& w : witnesses) msg += "; " + w;
  throw AuditFailure(msg);
}

void require_clean(const SimplicialSet& x) {
  const auto v = x.audit(4);
  if (v.empty()) return;
  std::vector<std::string> w;
  for (const auto& e : v) w.push_back(e.describe());
  audit_failed("simplicial identity violated", w);
}

void require_clean(const BisimplicialSet& b) {
  const auto v = b.audit(4);
  if (!v.empty()) audit_failed("bisimplicial identity violated", v);
}

void require_clean(const Category& c) {
  const auto v = c.validate(4);
  if (!v.empty()) audit_failed("category axiom violated", v);
}

void require_clean(const SimplicialCategory& c) {
  const auto v = c.audit(4);
  if (!v.empty()) audit_failed("simplicial category audit failed", v);
}

void require_clean(const SpectrumObject& s) {
  const auto v = s.audit(4);
  if (!v.empty()) audit_failed("spectrum audit failed", v);
}

class Loader {
 public:
  explicit Loader(const json& root) : root_(root) {}

  WorkbenchDocument load() {
    if (!root_.is_object()) throw InputError("/: expected a document object");
    const auto schema = get<std::string>(root_, "schema", "");
    if (schema != kSchema) throw InputError("/schema: unsupported schema '" + schema + "', expected " + kSchema);
    for (auto it = root_.begin(); it != root_.end(); ++it)
      if (!std::set<std::string>{"schema", "config", "entities", "maps", "requests", "suites"}.count(it.key()))
        throw InputError("/" + it.key() + ": unknown top-level field");
    if (root_.contains("config")) doc_.config = config_from_json(root_.at("config"));
    if (root_.contains("entities")) {
      const json& es = root_.at("entities");
      if (!es.is_object()) throw InputError("/entities: expected an object");
      for (auto it = es.begin(); it != es.end(); ++it) named(it.key(), "/entities");
    }
    if (root_.contains("maps")) {
      const json& ms = root_.at("maps");
      if (!ms.is_object()) throw InputError("/maps: expected an object");
      for (auto it = ms.begin(); it != ms.end(); ++it) load_map(it.key(), it.value(), "/maps/" + it.key());
    }
    if (root_.contains("requests")) {
      const json& rs = root_.at("requests");
      if (!rs.is_array()) throw InputError("/requests: expected an array");
      for (std::size_t k = 0; k < rs.size(); ++k) {
        const std::string w = at("/requests", k);
        Request r{get<std::string>(rs[k], "op", w), get<std::string>(rs[k], "of", w),
                  get_opt<std::string>(rs[k], "with", w), get_opt<int>(rs[k], "degree", w)};
        named(r.of, w + "/of");
        if (r.with) named(*r.with, w + "/with");
        doc_.requests.push_back(std::move(r));
      }
    }
    if (root_.contains("suites")) doc_.suites = as<std::vector<std::string>>(root_.at("suites"), "/suites");
    return std::move(doc_);
  }

 private:
  // Resolves a named entity, building it on first use.
  const Entity& named(const std::string& name, const std::string& where) {
    if (auto it = doc_.entities.find(name); it != doc_.entities.end()) return it->second;
    const json* es = root_.contains("entities") ? &root_.at("entities") : nullptr;
    if (!es || !es->contains(name)) throw InputError(where + ": unknown entity '" + name + "'");
    if (!in_progress_.insert(name).second) throw InputError(where + ": cyclic reference through '" + name + "'");
    const std::string w = "/entities/" + name;
    Entity e = guarded(w, [&] { return build(es->at(name), w); });
    in_progress_.erase(name);
    return doc_.entities.emplace(name, std::move(e)).first->second;
  }

  template <class F>
  auto guarded(const std::string& where, F f) -> decltype(f()) {
    try {
      return f();
    } catch (const AuditFailure& e) {
      if (std::string(e.what()).rfind("/", 0) == 0) throw;
      throw AuditFailure(where + ": " + e.what());
    } catch (const BoundExceeded& e) {
      if (std::string(e.what()).rfind("/", 0) == 0) throw;
      throw BoundExceeded(where + ": " + e.what());
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind("/", 0) == 0) throw;
      throw InputError(where + ": " + e.what());
    }
  }

  // A reference: an entity name or an inline entity object.
  Entity ref(const json& v, const std::string& where) {
    if (v.is_string()) return named(v.get<std::string>(), where);
    return guarded(where, [&] { return build(v, where); });
  }

  template <class T>
  T typed(const json& v, const std::string& where) {
    Entity e = ref(v, where);
    if (auto* t = std::get_if<T>(&e)) return std::move(*t);
    throw InputError(where + ": expected " + entity_kind(Entity(T{})) + ", found " + entity_kind(e));
  }

  template <class T>
  std::vector<T> typed_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + ": expected an array");
    std::vector<T> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(typed<T>(v[k], at(where, k)));
    return out;
  }

  RhoChoice rho_of(const json& j, const std::string& where) {
    if (auto r = get_opt<std::string>(j, "rho", where)) return parse_rho(*r);
    return doc_.config.rho;
  }

  Entity build(const json& j, const std::string& where) {
    const auto kind = get<std::string>(j, "kind", where);
    if (kind == "simplicial_set") {
      SimplicialSet x = simplicial_set(j, where);
      require_clean(x);
      return x;
    }
    if (kind == "bisimplicial_set") {
      BisimplicialSet b = bisimplicial_set(j, where);
      require_clean(b);
      return b;
    }
    if (kind == "category") {
      Category c = category(j, where);
      require_clean(c);
      return c;
    }
    if (kind == "simplicial_category") {
      SimplicialCategory c = simplicial_category(j, where);
      require_clean(c);
      return c;
    }
    if (kind == "spectrum") {
      SpectrumObject s = spectrum(j, where);
      require_clean(s);
      return s;
    }
    throw InputError(at(where, "kind") + ": unknown entity kind '" + kind + "'");
  }

  SimplicialSet simplicial_set(const json& j, const std::string& where) {
    SimplicialSet x;
    if (auto c = get_opt<std::string>(j, "construct", where)) {
      const std::string& op = *c;
      if (op == "nerve" || op == "nerve_iso") {
        const Category cat = typed<Category>(field(j, "of", where), at(where, "of"));
        const int bound = get<int>(j, "bound", where);
        x = op == "nerve" ? nerve(cat, bound) : nerve_iso(cat, bound);
      } else if (op == "product") {
        auto xs = typed_list<SimplicialSet>(field(j, "of", where), at(where, "of"));
        if (xs.size() != 2) throw InputError(at(where, "of") + ": product takes two factors");
        x = product_sset(xs[0], xs[1]);
      } else if (op == "diag") {
        x = diag(typed<BisimplicialSet>(field(j, "of", where), at(where, "of")));
      } else if (op == "wbar") {
        x = wbar(typed<BisimplicialSet>(field(j, "of", where), at(where, "of")),
                 get_opt<int>(j, "degree", where).value_or(-1));
      } else if (op == "diag_nerve_iso" || op == "wbar_nerve_iso") {
        const auto c2 = typed<SimplicialCategory>(field(j, "of", where), at(where, "of"));
        const int n = get_opt<int>(j, "degree", where).value_or(-1);
        x = op == "diag_nerve_iso" ? diag_nerve_iso(c2, n) : wbar_nerve_iso(c2, n);
      } else if (op == "c_sigma") {
        x = c_sigma(get<int>(j, "n", where), get<ordinal::Map>(j, "sigma", where), get<int>(j, "bound", where));
      } else {
        StandardKind k;
        try {
          k = parse_standard_kind(op);
        } catch (const InputError&) {
          throw InputError(at(where, "construct") + ": unknown simplicial set constructor '" + op + "'");
        }
        const int n = get_opt<int>(j, "n", where).value_or(0);
        x = build_standard(k, n, get<int>(j, "bound", where), get_opt<int>(j, "i", where).value_or(0));
      }
      if (get_opt<bool>(j, "pointed", where).value_or(false) && !x.basepoint()) x = x.with_basepoint(0);
      if (auto bp = get_opt<int>(j, "basepoint", where)) x = x.with_basepoint(*bp);
      return x;
    }
    const int bound = get<int>(j, "bound", where);
    auto sizes = get<std::vector<int>>(j, "sizes", where);
    auto faces = get<FaceTable>(j, "faces", where);
    auto degens = get<FaceTable>(j, "degeneracies", where);
    if (bound < 0 || static_cast<int>(sizes.size()) != bound + 1)
      throw InputError(at(where, "sizes") + ": expected bound + 1 entries");
    if (static_cast<int>(faces.size()) != bound + 1) throw InputError(at(where, "faces") + ": expected bound + 1 degrees");
    if (static_cast<int>(degens.size()) != bound + 1)
      throw InputError(at(where, "degeneracies") + ": expected bound + 1 degrees");
    return SimplicialSet::from_tables(bound, std::move(sizes), std::move(faces), std::move(degens),
                                      get_opt<int>(j, "basepoint", where));
  }

  BisimplicialSet bisimplicial_set(const json& j, const std::string& where) {
    BisimplicialSet b;
    if (auto c = get_opt<std::string>(j, "construct", where)) {
      const std::string& op = *c;
      const std::string w = at(where, "of");
      if (op == "dec") {
        b = dec(typed<SimplicialSet>(field(j, "of", where), w));
      } else if (op == "d_star") {
        b = d_star(typed<SimplicialSet>(field(j, "of", where), w));
      } else if (op == "box") {
        auto xs = typed_list<SimplicialSet>(field(j, "of", where), w);
        if (xs.size() != 2) throw InputError(w + ": box takes two factors");
        b = box_product(xs[0], xs[1]);
      } else if (op == "nerve_iso_levelwise") {
        const auto sc = typed<SimplicialCategory>(field(j, "of", where), w);
        if (auto rect = get_opt<std::vector<int>>(j, "rectangle", where)) {
          if (rect->size() != 2) throw InputError(at(where, "rectangle") + ": expected [max_p, max_q]");
          b = nerve_iso_levelwise(sc, BidegreeShape::rectangle((*rect)[0], (*rect)[1]));
        } else {
          b = nerve_iso_levelwise(sc, get<int>(j, "staircase", where));
        }
      } else {
        throw InputError(at(where, "construct") + ": unknown bisimplicial constructor '" + op + "'");
      }
      if (auto bp = get_opt<int>(j, "basepoint", where)) b = b.with_basepoint(*bp);
      return b;
    }
    BidegreeShape shape(get<std::vector<int>>(j, "rows", where));
    const json& cj = field(j, "cells", where);
    if (!cj.is_array()) throw InputError(at(where, "cells") + ": expected an array");
    std::vector<std::vector<BisimplicialSet::Cell>> cells;
    for (std::size_t p = 0; p < cj.size(); ++p) {
      const std::string wp = at(at(where, "cells"), p);
      if (!cj[p].is_array()) throw InputError(wp + ": expected an array");
      cells.emplace_back();
      for (std::size_t q = 0; q < cj[p].size(); ++q) {
        const std::string w = at(wp, q);
        const json& e = cj[p][q];
        BisimplicialSet::Cell cell;
        cell.size = get<int>(e, "size", w);
        using Ops = std::vector<std::vector<int>>;
        cell.dh = get_opt<Ops>(e, "dh", w).value_or(Ops{});
        cell.sh = get_opt<Ops>(e, "sh", w).value_or(Ops{});
        cell.dv = get_opt<Ops>(e, "dv", w).value_or(Ops{});
        cell.sv = get_opt<Ops>(e, "sv", w).value_or(Ops{});
        cells.back().push_back(std::move(cell));
      }
    }
    return BisimplicialSet(std::move(shape), std::move(cells), get_opt<int>(j, "basepoint", where));
  }

  Category category(const json& j, const std::string& where) {
    if (auto c = get_opt<std::string>(j, "construct", where)) {
      const std::string& op = *c;
      auto n = [&] { return get<int>(j, "n", where); };
      if (op == "terminal") return terminal_category();
      if (op == "discrete") return discrete_category(n());
      if (op == "chaotic") return chaotic_category(n());
      if (op == "cyclic") return cyclic_group(n());
      if (op == "ordinal") return ordinal_category(n());
      const std::string w = at(where, "of");
      if (op == "product") {
        auto cs = typed_list<Category>(field(j, "of", where), w);
        if (cs.size() != 2) throw InputError(w + ": product takes two factors");
        return product_category(cs[0], cs[1]);
      }
      if (op == "coproduct") {
        std::vector<CategoryPtr> parts;
        for (auto& c2 : typed_list<Category>(field(j, "of", where), w)) parts.push_back(share(std::move(c2)));
        return coproduct_category(parts);
      }
      if (op == "iso") return iso_subgroupoid(typed<Category>(field(j, "of", where), w)).category;
      if (op == "fundamental_groupoid")
        return fundamental_groupoid(typed<SimplicialSet>(field(j, "of", where), w), doc_.config.closure_bound).category;
      throw InputError(at(where, "construct") + ": unknown category constructor '" + op + "'");
    }
    const int objects = get<int>(j, "objects", where);
    auto source = get<std::vector<int>>(j, "source", where);
    auto target = get<std::vector<int>>(j, "target", where);
    auto identity = get<std::vector<int>>(j, "identity", where);
    if (objects < 0 || static_cast<int>(identity.size()) != objects)
      throw InputError(at(where, "identity") + ": expected one identity per object");
    const int morphisms = static_cast<int>(source.size());
    if (static_cast<int>(target.size()) != morphisms)
      throw InputError(at(where, "target") + ": source and target lengths differ");
    for (int a = 0; a < objects; ++a)
      if (identity[a] < 0 || identity[a] >= morphisms)
        throw InputError(at(at(where, "identity"), a) + ": not a morphism");
    std::vector<bool> is_id(morphisms, false);
    for (int a : identity) is_id[a] = true;
    std::map<std::pair<int, int>, int> table;
    const json& cj = field(j, "compose", where);
    if (!cj.is_array()) throw InputError(at(where, "compose") + ": expected an array of [g, f, g o f]");
    for (std::size_t k = 0; k < cj.size(); ++k) {
      const auto t = as<std::vector<int>>(cj[k], at(at(where, "compose"), k));
      if (t.size() != 3) throw InputError(at(at(where, "compose"), k) + ": expected [g, f, g o f]");
      if (!table.emplace(std::make_pair(t[0], t[1]), t[2]).second)
        throw InputError(at(at(where, "compose"), k) + ": composite given twice");
    }
    return Category::build(objects, std::move(source), std::move(target), std::move(identity), [&](int g, int f) {
      if (is_id[f]) return g;
      if (is_id[g]) return f;
      auto it = table.find({g, f});
      if (it == table.end())
        throw InputError(at(where, "compose") + ": missing composite of " + std::to_string(g) + " after " +
                         std::to_string(f));
      return it->second;
    });
  }

  SimplicialCategory simplicial_category(const json& j, const std::string& where) {
    SimplicialCategory out;
    if (auto c = get_opt<std::string>(j, "construct", where)) {
      const std::string& op = *c;
      const std::string w = at(where, "of");
      auto of_scat = [&] { return typed<SimplicialCategory>(field(j, "of", where), w); };
      auto pair = [&] {
        const json& v = field(j, "of", where);
        if (!v.is_array() || v.size() != 2) throw InputError(w + ": expected two operands");
        return std::make_pair(typed<SimplicialCategory>(v[0], at(w, 0)), typed<SimplicialSet>(v[1], at(w, 1)));
      };
      const int cb = doc_.config.closure_bound;
      if (op == "constant") {
        out = SimplicialCategory::constant(share(typed<Category>(field(j, "of", where), w)), get<int>(j, "bound", where));
      } else if (op == "terminal") {
        out = terminal_scat(get<int>(j, "bound", where));
      } else if (op == "s0") {
        out = s0_scat(get<int>(j, "bound", where));
      } else if (op == "discrete") {
        out = discrete_scat(typed<SimplicialSet>(field(j, "of", where), w));
      } else if (op == "rho") {
        out = rho(typed<SimplicialSet>(field(j, "of", where), w), rho_of(j, where), cb);
      } else if (op == "pi_levelwise") {
        out = pi_levelwise(typed<BisimplicialSet>(field(j, "of", where), w), cb);
      } else if (op == "product") {
        const json& v = field(j, "of", where);
        auto cs = typed_list<SimplicialCategory>(v, w);
        if (cs.size() != 2) throw InputError(w + ": product takes two factors");
        out = product_scat(cs[0], cs[1]);
      } else if (op == "add_basepoint") {
        out = add_basepoint(of_scat());
      } else if (op == "suspend") {
        out = suspend(of_scat(), rho_of(j, where), 100000, cb);
      } else if (op == "loop") {
        out = loop(of_scat(), rho_of(j, where), doc_.config.cap, cb).category;
      } else if (op == "smash" || op == "odot" || op == "cotensor" || op == "tensor") {
        auto [c2, x] = pair();
        const RhoChoice r = rho_of(j, where);
        if (op == "smash") out = smash(c2, x, r, 100000, cb);
        else if (op == "odot") out = odot(c2, x, r, 100000, cb);
        else if (op == "tensor") out = tensor_rho(c2, x, r, cb);
        else out = cotensor(c2, x, r, doc_.config.cap, cb).category;
      } else {
        throw InputError(at(where, "construct") + ": unknown simplicial category constructor '" + op + "'");
      }
      if (auto bp = get_opt<int>(j, "basepoint", where)) out = out.with_basepoint(*bp);
      return out;
    }
    const json& lv = field(j, "levels", where);
    if (!lv.is_array() || lv.empty()) throw InputError(at(where, "levels") + ": expected a non-empty array");
    std::vector<CategoryPtr> levels;
    for (auto& c2 : typed_list<Category>(lv, at(where, "levels"))) levels.push_back(share(std::move(c2)));
    auto functor_table = [&](const std::string& key) {
      std::vector<std::vector<FunctorMap>> t;
      const json& fj = field(j, key, where);
      if (!fj.is_array()) throw InputError(at(where, key) + ": expected an array");
      for (std::size_t n = 0; n < fj.size(); ++n) {
        t.emplace_back();
        const std::string wn = at(at(where, key), n);
        if (!fj[n].is_array()) throw InputError(wn + ": expected an array");
        for (std::size_t i = 0; i < fj[n].size(); ++i) t.back().push_back(functor_map_from(fj[n][i], at(wn, i)));
      }
      return t;
    };
    return SimplicialCategory::build(std::move(levels), functor_table("faces"), functor_table("degeneracies"),
                                     get_opt<std::vector<int>>(j, "basepoint", where));
  }

  SpectrumObject spectrum(const json& j, const std::string& where) {
    const RhoChoice r = rho_of(j, where);
    if (auto c = get_opt<std::string>(j, "construct", where)) {
      if (*c == "sigma_infinity")
        return sigma_infinity(typed<SimplicialCategory>(field(j, "of", where), at(where, "of")),
                              get<int>(j, "length", where), r);
      if (*c == "from_levels")
        return spectrum_from_levels(typed_list<SimplicialCategory>(field(j, "of", where), at(where, "of")), r);
      throw InputError(at(where, "construct") + ": unknown spectrum constructor '" + *c + "'");
    }
    SpectrumObject s;
    s.rho = r;
    for (auto& c2 : typed_list<SimplicialCategory>(field(j, "levels", where), at(where, "levels")))
      s.levels.push_back(share(std::move(c2)));
    const json& st = field(j, "structure", where);
    if (!st.is_array() || st.size() + 1 != s.levels.size())
      throw InputError(at(where, "structure") + ": expected one structure functor per consecutive pair of levels");
    for (std::size_t n = 0; n < st.size(); ++n) {
      const std::string w = at(at(where, "structure"), n);
      SimplicialFunctor f{share(suspend(*s.levels[n], r, 100000, doc_.config.closure_bound)), s.levels[n + 1], {}};
      const json& lj = field(st[n], "levels", w);
      if (!lj.is_array()) throw InputError(at(w, "levels") + ": expected an array");
      for (std::size_t k = 0; k < lj.size(); ++k) f.levels.push_back(functor_map_from(lj[k], at(at(w, "levels"), k)));
      s.structure.push_back(std::move(f));
    }
    return s;
  }

  void load_map(const std::string& name, const json& j, const std::string& where) {
    guarded(where, [&] {
      const auto kind = get<std::string>(j, "kind", where);
      const auto src = get<std::string>(j, "source", where);
      const auto tgt = get<std::string>(j, "target", where);
      const Entity& a = named(src, at(where, "source"));
      const Entity& b = named(tgt, at(where, "target"));
      auto expect = [&](const Entity& e, auto* tag, const std::string& key) {
        using T = std::remove_pointer_t<decltype(tag)>;
        if (!std::holds_alternative<T>(e))
          throw InputError(at(where, key) + ": expected " + entity_kind(Entity(T{})) + ", found " + entity_kind(e));
        return std::make_shared<const T>(std::get<T>(e));
      };
      NamedMap m{src, tgt, SimplicialMap{}};
      if (kind == "simplicial_map") {
        SimplicialMap f{expect(a, static_cast<SimplicialSet*>(nullptr), "source"),
                        expect(b, static_cast<SimplicialSet*>(nullptr), "target"), {}};
        if (get_opt<std::string>(j, "construct", where) == std::optional<std::string>("by_vertices"))
          f.image = by_vertices(*f.source, *f.target, where);
        else
          f.image = get<std::vector<std::vector<int>>>(j, "image", where);
        const auto v = f.audit();
        if (!v.empty()) audit_failed("not a simplicial map", v);
        m.value = std::move(f);
      } else if (kind == "functor") {
        Functor f{expect(a, static_cast<Category*>(nullptr), "source"), expect(b, static_cast<Category*>(nullptr), "target"),
                  functor_map_from(j, where)};
        const auto v = f.audit(4);
        if (!v.empty()) audit_failed("not a functor", v);
        m.value = std::move(f);
      } else if (kind == "simplicial_functor") {
        SimplicialFunctor f{expect(a, static_cast<SimplicialCategory*>(nullptr), "source"),
                            expect(b, static_cast<SimplicialCategory*>(nullptr), "target"), {}};
        const json& lj = field(j, "levels", where);
        if (!lj.is_array()) throw InputError(at(where, "levels") + ": expected an array");
        for (std::size_t k = 0; k < lj.size(); ++k) f.levels.push_back(functor_map_from(lj[k], at(at(where, "levels"), k)));
        if (static_cast<int>(f.levels.size()) != f.source->bound() + 1)
          throw InputError(at(where, "levels") + ": expected one functor per source level");
        const auto v = f.audit(4);
        if (!v.empty()) audit_failed("not a simplicial functor", v);
        m.value = std::move(f);
      } else {
        throw InputError(at(where, "kind") + ": unknown map kind '" + kind + "'");
      }
      doc_.maps.emplace(name, std::move(m));
      return 0;
    });
  }

  // Sends each simplex to the target simplex with the same vertex sequence.
  static std::vector<std::vector<int>> by_vertices(const SimplicialSet& x, const SimplicialSet& y,
                                                   const std::string& where) {
    if (y.bound() < x.bound()) throw InputError(where + ": target truncated below source");
    std::vector<std::vector<int>> image(x.bound() + 1);
    for (int n = 0; n <= x.bound(); ++n) {
      std::map<std::vector<int>, int> index;
      for (int s = 0; s < y.size(n); ++s)
        if (!index.emplace(y.vertices(n, s), s).second)
          throw InputError(where + ": target simplices are not determined by their vertices");
      for (int s = 0; s < x.size(n); ++s) {
        auto it = index.find(x.vertices(n, s));
        if (it == index.end()) throw InputError(where + ": no target simplex with the vertices of simplex " + std::to_string(s));
        image[n].push_back(it->second);
      }
    }
    return image;
  }

  const json& root_;
  WorkbenchDocument doc_;
  std::set<std::string> in_progress_;
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

const Entity& WorkbenchDocument::entity(const std::string& name) const {
  auto it = entities.find(name);
  if (it == entities.end()) throw InputError("unknown entity '" + name + "'");
  return it->second;
}

std::string entity_kind(const Entity& e) {
  switch (e.index()) {
    case 0:
      return "simplicial_set";
    case 1:
      return "bisimplicial_set";
    case 2:
      return "category";
    case 3:
      return "simplicial_category";
  }
  return "spectrum";
}

WorkbenchDocument parse_document(const json& j) { return Loader(j).load(); }

WorkbenchDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  return parse_document(j);
}

json to_json(const SimplicialSet& x) {
  json j;
  j["kind"] = "simplicial_set";
  j["bound"] = x.bound();
  j["sizes"] = x.sizes();
  j["faces"] = x.face_table();
  j["degeneracies"] = x.degeneracy_table();
  if (x.basepoint()) j["basepoint"] = *x.basepoint();
  return j;
}

json to_json(const BisimplicialSet& b) {
  json j;
  j["kind"] = "bisimplicial_set";
  j["rows"] = b.shape().rows();
  json cells = json::array();
  for (int p = 0; p <= b.shape().max_p(0); ++p) {
    json col = json::array();
    for (int q = 0; q <= b.shape().max_q_at(p); ++q) {
      const auto& c = b.cell(p, q);
      json e;
      e["size"] = c.size;
      if (!c.dh.empty()) e["dh"] = c.dh;
      if (!c.sh.empty()) e["sh"] = c.sh;
      if (!c.dv.empty()) e["dv"] = c.dv;
      if (!c.sv.empty()) e["sv"] = c.sv;
      col.push_back(std::move(e));
    }
    cells.push_back(std::move(col));
  }
  j["cells"] = std::move(cells);
  if (b.basepoint()) j["basepoint"] = *b.basepoint();
  return j;
}

json to_json(const Category& c) {
  json j;
  j["kind"] = "category";
  j["objects"] = c.object_count();
  std::vector<int> source, target, identity;
  for (int f = 0; f < c.morphism_count(); ++f) {
    source.push_back(c.source(f));
    target.push_back(c.target(f));
  }
  for (int a = 0; a < c.object_count(); ++a) identity.push_back(c.identity(a));
  j["source"] = source;
  j["target"] = target;
  j["identity"] = identity;
  json comp = json::array();
  for (int f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out(c.target(f)))
      if (!c.is_identity(g)) comp.push_back(json::array({g, f, c.compose(g, f)}));
  }
  j["compose"] = std::move(comp);
  return j;
}

json to_json(const SimplicialCategory& c) {
  json j;
  j["kind"] = "simplicial_category";
  json levels = json::array(), faces = json::array(), degens = json::array();
  for (int n = 0; n <= c.bound(); ++n) {
    levels.push_back(to_json(c.level(n)));
    json fs = json::array(), ds = json::array();
    for (int i = 0; n >= 1 && i <= n; ++i) fs.push_back(functor_map_json(c.face(n, i)));
    for (int k = 0; n < c.bound() && k <= n; ++k) ds.push_back(functor_map_json(c.degeneracy(n, k)));
    faces.push_back(std::move(fs));
    degens.push_back(std::move(ds));
  }
  j["levels"] = std::move(levels);
  j["faces"] = std::move(faces);
  j["degeneracies"] = std::move(degens);
  if (c.pointed()) j["basepoint"] = c.basepoints();
  return j;
}

json to_json(const SpectrumObject& s) {
  json j;
  j["kind"] = "spectrum";
  j["rho"] = to_string(s.rho);
  json levels = json::array(), structure = json::array();
  for (const auto& l : s.levels) levels.push_back(to_json(*l));
  for (const auto& f : s.structure) {
    json ls = json::array();
    for (const auto& m : f.levels) ls.push_back(functor_map_json(m));
    structure.push_back(json{{"levels", std::move(ls)}});
  }
  j["levels"] = std::move(levels);
  j["structure"] = std::move(structure);
  return j;
}

json to_json(const Entity& e) {
  return std::visit([](const auto& v) { return to_json(v); }, e);
}

json config_to_json(const HarnessConfig& c) {
  json j;
  j["bound"] = c.bound;
  j["closure_bound"] = c.closure_bound;
  j["cap"] = c.cap;
  j["degree"] = c.degree;
  j["rho"] = to_string(c.rho);
  return j;
}

HarnessConfig config_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  HarnessConfig c;
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!std::set<std::string>{"bound", "closure_bound", "cap", "degree", "rho", "threads"}.count(it.key()))
      throw InputError(at(where, it.key()) + ": unknown configuration field");
  c.bound = get_opt<int>(j, "bound", where).value_or(c.bound);
  c.closure_bound = get_opt<int>(j, "closure_bound", where).value_or(c.closure_bound);
  c.cap = get_opt<std::uint64_t>(j, "cap", where).value_or(c.cap);
  c.degree = get_opt<int>(j, "degree", where).value_or(c.degree);
  c.threads = get_opt<int>(j, "threads", where).value_or(c.threads);
  if (auto r = get_opt<std::string>(j, "rho", where)) {
    try {
      c.rho = parse_rho(*r);
    } catch (const InputError& e) {
      throw InputError(at(where, "rho") + ": " + e.what());
    }
  }
  if (c.bound < 0 || c.closure_bound < 1 || c.degree < 0 || c.threads < 0)
    throw InputError(where + ": bounds must be non-negative");
  return c;
}

json serialize(const WorkbenchDocument& doc) {
  json j;
  j["schema"] = kSchema;
  j["config"] = config_to_json(doc.config);
  if (!doc.entities.empty()) {
    json es = json::object();
    for (const auto& [name, e] : doc.entities) es[name] = to_json(e);
    j["entities"] = std::move(es);
  }
  if (!doc.maps.empty()) {
    json ms = json::object();
    for (const auto& [name, m] : doc.maps) {
      json e;
      std::visit(
          [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, SimplicialMap>) {
              e["kind"] = "simplicial_map";
              e["source"] = m.source;
              e["target"] = m.target;
              e["image"] = f.image;
            } else if constexpr (std::is_same_v<T, Functor>) {
              e["kind"] = "functor";
              e["source"] = m.source;
              e["target"] = m.target;
              e["objects"] = f.map.objects;
              e["morphisms"] = f.map.morphisms;
            } else {
              e["kind"] = "simplicial_functor";
              e["source"] = m.source;
              e["target"] = m.target;
              json ls = json::array();
              for (const auto& l : f.levels) ls.push_back(functor_map_json(l));
              e["levels"] = std::move(ls);
            }
          },
          m.value);
      ms[name] = std::move(e);
    }
    j["maps"] = std::move(ms);
  }
  if (!doc.requests.empty()) {
    json rs = json::array();
    for (const auto& r : doc.requests) {
      json e;
      e["op"] = r.op;
      e["of"] = r.of;
      if (r.with) e["with"] = *r.with;
      if (r.degree) e["degree"] = *r.degree;
      rs.push_back(std::move(e));
    }
    j["requests"] = std::move(rs);
  }
  if (!doc.suites.empty()) j["suites"] = doc.suites;
  return j;
}

namespace {

bool flat(const json& j) {
  if (!j.is_structured()) return true;
  if (!j.is_array()) return j.empty();
  return std::all_of(j.begin(), j.end(), [](const json& e) { return !e.is_structured() || e.empty(); });
}

void pretty_into(const json& j, int indent, std::string& out) {
  if (flat(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 1, ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += json(it.key()).dump() + ": ";
    pretty_into(it.value(), indent + 1, out);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string pretty(const json& j) {
  std::string out;
  pretty_into(j, 0, out);
  return out + "\n";
}

std::string serialize_text(const WorkbenchDocument& doc) { return pretty(serialize(doc)); }

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace simpcat::harness
