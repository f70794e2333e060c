#include "simpcat/scat/simplicial_category.hpp"

#include <set>

#include "simpcat/cat/operations.hpp"
#include "simpcat/sset/identities.hpp"

namespace simpcat {

namespace {

bool shaped(const FunctorMap& f, const Category& s) {
  return static_cast<int>(f.objects.size()) == s.object_count() &&
         static_cast<int>(f.morphisms.size()) == s.morphism_count();
}

}  // namespace

SimplicialCategory SimplicialCategory::build(std::vector<CategoryPtr> levels,
                                             std::vector<std::vector<FunctorMap>> faces,
                                             std::vector<std::vector<FunctorMap>> degeneracies,
                                             std::optional<std::vector<int>> basepoint) {
  const int bound = static_cast<int>(levels.size()) - 1;
  if (bound < 0) throw AuditFailure("simplicial category needs level 0");
  faces.resize(bound + 1);
  degeneracies.resize(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    if (!levels[n]) throw AuditFailure("missing level " + std::to_string(n));
    const std::size_t nf = n >= 1 ? n + 1 : 0;
    const std::size_t nd = n < bound ? n + 1 : 0;
    if (faces[n].size() != nf || degeneracies[n].size() != nd)
      throw AuditFailure("wrong number of structure functors at level " + std::to_string(n));
    for (const auto& f : faces[n])
      if (!shaped(f, *levels[n])) throw AuditFailure("face table at level " + std::to_string(n) + " has the wrong size");
    for (const auto& f : degeneracies[n])
      if (!shaped(f, *levels[n]))
        throw AuditFailure("degeneracy table at level " + std::to_string(n) + " has the wrong size");
  }
  SimplicialCategory c;
  c.levels_ = std::move(levels);
  c.faces_ = std::move(faces);
  c.degens_ = std::move(degeneracies);
  if (basepoint) {
    if (static_cast<int>(basepoint->size()) != bound + 1) throw AuditFailure("one basepoint per level required");
    for (int n = 0; n <= bound; ++n)
      if ((*basepoint)[n] < 0 || (*basepoint)[n] >= c.levels_[n]->object_count())
        throw AuditFailure("basepoint outside level " + std::to_string(n));
    c.basepoint_ = std::move(*basepoint);
  }
  return c;
}

SimplicialCategory SimplicialCategory::constant(CategoryPtr c, int bound, std::optional<int> basepoint) {
  const FunctorMap id = identity_map(*c);
  std::vector<CategoryPtr> levels(bound + 1, c);
  std::vector<std::vector<FunctorMap>> faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    if (n >= 1) faces[n].assign(n + 1, id);
    if (n < bound) degens[n].assign(n + 1, id);
  }
  std::optional<std::vector<int>> bp;
  if (basepoint) bp = std::vector<int>(bound + 1, *basepoint);
  return build(std::move(levels), std::move(faces), std::move(degens), std::move(bp));
}

SimplicialCategory SimplicialCategory::with_basepoint(std::optional<int> object) const {
  SimplicialCategory c = *this;
  c.basepoint_.clear();
  if (!object) return c;
  if (*object < 0 || *object >= level(0).object_count()) throw InputError("basepoint outside level 0");
  c.basepoint_.push_back(*object);
  for (int n = 0; n < bound(); ++n) c.basepoint_.push_back(degens_[n][0].objects[c.basepoint_.back()]);
  return c;
}

SimplicialCategory SimplicialCategory::truncate(int b) const {
  if (b < 0 || b > bound()) throw InputError("truncation outside the available levels");
  SimplicialCategory c;
  c.levels_.assign(levels_.begin(), levels_.begin() + b + 1);
  c.faces_.assign(faces_.begin(), faces_.begin() + b + 1);
  c.degens_.assign(degens_.begin(), degens_.begin() + b + 1);
  c.degens_[b].clear();
  if (pointed()) c.basepoint_.assign(basepoint_.begin(), basepoint_.begin() + b + 1);
  return c;
}

std::vector<std::string> SimplicialCategory::audit(std::size_t limit) const {
  std::vector<std::string> out;
  auto report = [&](std::string s) {
    if (out.size() < limit) out.push_back(std::move(s));
  };
  for (int n = 0; n <= bound(); ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i)
      for (const auto& e : audit_functor(level(n), level(n - 1), faces_[n][i], 1))
        report("d_" + std::to_string(i) + " at level " + std::to_string(n) + ": " + e);
    for (int j = 0; n < bound() && j <= n; ++j)
      for (const auto& e : audit_functor(level(n), level(n + 1), degens_[n][j], 1))
        report("s_" + std::to_string(j) + " at level " + std::to_string(n) + ": " + e);
  }
  if (!out.empty()) return out;
  // Objects and morphisms of a level share one index range: objects first.
  auto size = [&](int n) { return level(n).object_count() + level(n).morphism_count(); };
  auto apply = [&](const FunctorMap& f, int n, int target_level, int x) {
    const int objs = level(n).object_count();
    return x < objs ? f.objects[x] : level(target_level).object_count() + f.morphisms[x - objs];
  };
  auto face = [&](int n, int i, int x) { return apply(faces_[n][i], n, n - 1, x); };
  auto degen = [&](int n, int j, int x) { return apply(degens_[n][j], n, n + 1, x); };
  for (const auto& v : audit_simplicial_identities(bound(), size, face, degen, limit)) report(v.describe());
  if (pointed())
    for (int n = 0; n <= bound(); ++n) {
      for (int i = 0; n >= 1 && i <= n; ++i)
        if (faces_[n][i].objects[basepoint_[n]] != basepoint_[n - 1])
          report("d_" + std::to_string(i) + " moves the basepoint at level " + std::to_string(n));
      for (int j = 0; n < bound() && j <= n; ++j)
        if (degens_[n][j].objects[basepoint_[n]] != basepoint_[n + 1])
          report("s_" + std::to_string(j) + " moves the basepoint at level " + std::to_string(n));
    }
  return out;
}

bool operator==(const SimplicialCategory& a, const SimplicialCategory& b) {
  if (a.bound() != b.bound() || a.faces_ != b.faces_ || a.degens_ != b.degens_ || a.basepoint_ != b.basepoint_)
    return false;
  for (int n = 0; n <= a.bound(); ++n)
    if (!(a.level(n) == b.level(n))) return false;
  return true;
}

std::vector<std::string> SimplicialFunctor::audit(std::size_t limit) const {
  std::vector<std::string> out;
  const SimplicialCategory& s = *source;
  const SimplicialCategory& t = *target;
  if (static_cast<int>(levels.size()) != s.bound() + 1 || t.bound() < s.bound()) {
    out.push_back("simplicial functor has the wrong number of levels");
    return out;
  }
  auto report = [&](std::string m) {
    if (out.size() < limit) out.push_back(std::move(m));
  };
  for (int n = 0; n <= s.bound(); ++n)
    for (const auto& e : audit_functor(s.level(n), t.level(n), levels[n], 1))
      report("level " + std::to_string(n) + ": " + e);
  if (!out.empty()) return out;
  for (int n = 0; n <= s.bound(); ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i)
      if (compose_maps(levels[n - 1], s.face(n, i)) != compose_maps(t.face(n, i), levels[n]))
        report("d_" + std::to_string(i) + " square fails at level " + std::to_string(n));
    for (int j = 0; n < s.bound() && j <= n; ++j)
      if (compose_maps(levels[n + 1], s.degeneracy(n, j)) != compose_maps(t.degeneracy(n, j), levels[n]))
        report("s_" + std::to_string(j) + " square fails at level " + std::to_string(n));
    if (s.pointed() && t.pointed() && levels[n].objects[s.basepoint(n)] != t.basepoint(n))
      report("basepoint not preserved at level " + std::to_string(n));
  }
  return out;
}

SimplicialFunctor SimplicialFunctor::identity(SCatPtr c) {
  SimplicialFunctor f{c, c, {}};
  for (int n = 0; n <= c->bound(); ++n) f.levels.push_back(identity_map(c->level(n)));
  return f;
}

SimplicialFunctor SimplicialFunctor::compose(const SimplicialFunctor& g, const SimplicialFunctor& f) {
  SimplicialFunctor h{f.source, g.target, {}};
  for (std::size_t n = 0; n < f.levels.size(); ++n) h.levels.push_back(compose_maps(g.levels.at(n), f.levels[n]));
  return h;
}

SimplicialCategory terminal_scat(int bound) { return SimplicialCategory::constant(share(terminal_category()), bound, 0); }

SimplicialCategory s0_scat(int bound) { return SimplicialCategory::constant(share(discrete_category(2)), bound, 0); }

SimplicialCategory discrete_scat(const SimplicialSet& x) {
  std::vector<CategoryPtr> levels;
  std::vector<std::vector<FunctorMap>> faces(x.bound() + 1), degens(x.bound() + 1);
  for (int n = 0; n <= x.bound(); ++n) levels.push_back(share(discrete_category(x.size(n))));
  for (int n = 0; n <= x.bound(); ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) faces[n].push_back({x.face_table()[n][i], x.face_table()[n][i]});
    for (int j = 0; n < x.bound() && j <= n; ++j)
      degens[n].push_back({x.degeneracy_table()[n][j], x.degeneracy_table()[n][j]});
  }
  std::optional<std::vector<int>> bp;
  if (x.basepoint()) {
    bp.emplace(1, *x.basepoint());
    for (int n = 0; n < x.bound(); ++n) bp->push_back(x.degeneracy(n, 0, bp->back()));
  }
  return SimplicialCategory::build(std::move(levels), std::move(faces), std::move(degens), std::move(bp));
}

FunctorMap product_map(const FunctorMap& f, const FunctorMap& g, const Category& a, const Category& b,
                       const Category& b2) {
  FunctorMap out;
  for (int x = 0; x < a.object_count(); ++x)
    for (int y = 0; y < b.object_count(); ++y) out.objects.push_back(f.objects[x] * b2.object_count() + g.objects[y]);
  for (int m = 0; m < a.morphism_count(); ++m)
    for (int k = 0; k < b.morphism_count(); ++k)
      out.morphisms.push_back(f.morphisms[m] * b2.morphism_count() + g.morphisms[k]);
  return out;
}

SimplicialCategory product_scat(const SimplicialCategory& a, const SimplicialCategory& b) {
  const int bound = std::min(a.bound(), b.bound());
  std::vector<CategoryPtr> levels;
  std::vector<std::vector<FunctorMap>> faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) levels.push_back(share(product_category(a.level(n), b.level(n))));
  for (int n = 0; n <= bound; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i)
      faces[n].push_back(product_map(a.face(n, i), b.face(n, i), a.level(n), b.level(n), b.level(n - 1)));
    for (int j = 0; n < bound && j <= n; ++j)
      degens[n].push_back(
          product_map(a.degeneracy(n, j), b.degeneracy(n, j), a.level(n), b.level(n), b.level(n + 1)));
  }
  std::optional<std::vector<int>> bp;
  if (a.pointed() && b.pointed()) {
    bp.emplace();
    for (int n = 0; n <= bound; ++n) bp->push_back(a.basepoint(n) * b.level(n).object_count() + b.basepoint(n));
  }
  return SimplicialCategory::build(std::move(levels), std::move(faces), std::move(degens), std::move(bp));
}

SimplicialFunctor product_functor(const SimplicialFunctor& f, const SimplicialFunctor& g, SCatPtr source,
                                  SCatPtr target) {
  SimplicialFunctor h{source, target, {}};
  for (int n = 0; n <= source->bound(); ++n)
    h.levels.push_back(product_map(f.levels.at(n), g.levels.at(n), f.source->level(n), g.source->level(n),
                                   g.target->level(n)));
  return h;
}

SimplicialFunctor to_terminal(SCatPtr c, SCatPtr terminal) {
  SimplicialFunctor f{c, terminal, {}};
  for (int n = 0; n <= c->bound(); ++n)
    f.levels.push_back({std::vector<int>(c->level(n).object_count(), 0), std::vector<int>(c->level(n).morphism_count(), 0)});
  return f;
}

SimplicialFunctor basepoint_functor(SCatPtr terminal, SCatPtr c) {
  if (!c->pointed()) throw InputError("basepoint_functor needs a pointed target");
  SimplicialFunctor f{terminal, c, {}};
  for (int n = 0; n <= terminal->bound(); ++n)
    f.levels.push_back({{c->basepoint(n)}, {c->level(n).identity(c->basepoint(n))}});
  return f;
}

std::uint64_t for_each_simplicial_functor(const SimplicialCategory& a, const SimplicialCategory& b,
                                          const SFunctorSearch& options,
                                          const std::function<void(const std::vector<FunctorMap>&)>& visit) {
  if (b.bound() < a.bound()) throw InputError("target has fewer levels than the source");
  const bool pointed = options.pointed;
  if (pointed && !(a.pointed() && b.pointed())) throw InputError("pointed search needs pointed categories");
  std::uint64_t counter = 0, found = 0;
  std::vector<FunctorMap> cur(a.bound() + 1);
  auto level = [&](auto& self, int n) -> void {
    if (n > a.bound()) {
      ++found;
      visit(cur);
      return;
    }
    const Category& an = a.level(n);
    std::vector<int> forced_obj(an.object_count(), -1), forced_mor(an.morphism_count(), -1);
    for (int j = 0; n >= 1 && j < n; ++j) {
      const FunctorMap& sa = a.degeneracy(n - 1, j);
      const FunctorMap& sb = b.degeneracy(n - 1, j);
      for (std::size_t x = 0; x < sa.objects.size(); ++x) {
        int& slot = forced_obj[sa.objects[x]];
        const int want = sb.objects[cur[n - 1].objects[x]];
        if (slot >= 0 && slot != want) return;
        slot = want;
      }
      for (std::size_t f = 0; f < sa.morphisms.size(); ++f) {
        int& slot = forced_mor[sa.morphisms[f]];
        const int want = sb.morphisms[cur[n - 1].morphisms[f]];
        if (slot >= 0 && slot != want) return;
        slot = want;
      }
    }
    FunctorSearch search;
    search.cap = options.cap;
    search.counter = &counter;
    search.object_ok = [&](int x, int y) {
      if (forced_obj[x] >= 0) return y == forced_obj[x] && (!options.object_ok || options.object_ok(n, x, y));
      if (pointed && x == a.basepoint(n) && y != b.basepoint(n)) return false;
      if (options.object_ok && !options.object_ok(n, x, y)) return false;
      for (int i = 0; n >= 1 && i <= n; ++i)
        if (b.face(n, i).objects[y] != cur[n - 1].objects[a.face(n, i).objects[x]]) return false;
      return true;
    };
    search.morphism_ok = [&](int f, int m) {
      if (forced_mor[f] >= 0) return m == forced_mor[f];
      for (int i = 0; n >= 1 && i <= n; ++i)
        if (b.face(n, i).morphisms[m] != cur[n - 1].morphisms[a.face(n, i).morphisms[f]]) return false;
      return true;
    };
    for_each_functor(an, b.level(n), search, [&](const FunctorMap& f) {
      cur[n] = f;
      self(self, n + 1);
    });
  };
  level(level, 0);
  return found;
}

std::uint64_t count_simplicial_functors(const SimplicialCategory& a, const SimplicialCategory& b,
                                        const SFunctorSearch& options) {
  return for_each_simplicial_functor(a, b, options, [](const std::vector<FunctorMap>&) {});
}

bool levelwise_bijective(const SimplicialFunctor& f) {
  for (int n = 0; n <= f.source->bound(); ++n) {
    const auto& m = f.levels[n];
    const std::set<int> obj(m.objects.begin(), m.objects.end()), mor(m.morphisms.begin(), m.morphisms.end());
    const Category& s = f.source->level(n);
    const Category& t = f.target->level(n);
    if (static_cast<int>(obj.size()) != t.object_count() || s.object_count() != t.object_count() ||
        static_cast<int>(mor.size()) != t.morphism_count() || s.morphism_count() != t.morphism_count())
      return false;
  }
  return true;
}

bool isomorphic(const SimplicialCategory& a, const SimplicialCategory& b, std::uint64_t cap) {
  if (a.bound() != b.bound()) return false;
  for (int n = 0; n <= a.bound(); ++n)
    if (a.level(n).object_count() != b.level(n).object_count() ||
        a.level(n).morphism_count() != b.level(n).morphism_count())
      return false;
  auto pa = std::make_shared<const SimplicialCategory>(a);
  auto pb = std::make_shared<const SimplicialCategory>(b);
  SFunctorSearch search;
  search.pointed = a.pointed() && b.pointed();
  search.cap = cap;
  // An isomorphism preserves out-degrees and endomorphism counts.
  search.object_ok = [&](int n, int x, int y) {
    return a.level(n).out(x).size() == b.level(n).out(y).size() &&
           a.level(n).hom(x, x).size() == b.level(n).hom(y, y).size();
  };
  struct Found {};
  try {
    for_each_simplicial_functor(a, b, search, [&](const std::vector<FunctorMap>& levels) {
      if (levelwise_bijective(SimplicialFunctor{pa, pb, levels})) throw Found{};
    });
  } catch (const Found&) {
    return true;
  }
  return false;
}

}  // namespace simpcat
