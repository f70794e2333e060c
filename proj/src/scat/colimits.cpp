#include "simpcat/scat/colimits.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "simpcat/cat/operations.hpp"

namespace simpcat {

namespace {

// The functor between level colimits induced by one structure functor per object.
FunctorMap induced(const CatCocone& from, const CatCocone& to, const SCatDiagram& d,
                   const std::function<const FunctorMap&(const SimplicialCategory&)>& op) {
  return cocone_factor(
      from, to.apex,
      [&](int k, int x) { return to.legs[k].objects[op(*d.objects[k]).objects[x]]; },
      [&](int k, int f) { return to.legs[k].morphisms[op(*d.objects[k]).morphisms[f]]; });
}

}  // namespace

SCatCocone colimit_scat(const SCatDiagram& d, int bound, std::optional<int> basepoint_from) {
  if (d.objects.empty()) throw InputError("colimit_scat: empty diagram has no level count");
  const int levels = d.objects[0]->bound();
  for (const auto& c : d.objects)
    if (c->bound() != levels) throw InputError("colimit_scat: diagram objects have different bounds");
  if (basepoint_from && !d.objects.at(*basepoint_from)->pointed())
    throw InputError("colimit_scat: basepoint source is not pointed");
  SCatCocone out;
  for (int n = 0; n <= levels; ++n) {
    CatDiagram level;
    for (const auto& c : d.objects) level.objects.push_back(c->level_ptr(n));
    for (const auto& a : d.arrows) level.arrows.push_back({a.from, a.to, a.map.levels.at(n)});
    try {
      out.levels.push_back(colimit_cat(level, bound));
    } catch (const BoundExceeded& e) {
      throw BoundExceeded("colimit_scat: level " + std::to_string(n) + ": " + e.what());
    }
  }
  std::vector<CategoryPtr> cats;
  std::vector<std::vector<FunctorMap>> faces(levels + 1), degens(levels + 1);
  for (const auto& l : out.levels) cats.push_back(share(l.apex));
  for (int n = 0; n <= levels; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i)
      faces[n].push_back(induced(out.levels[n], out.levels[n - 1], d,
                                 [&](const SimplicialCategory& c) -> const FunctorMap& { return c.face(n, i); }));
    for (int j = 0; n < levels && j <= n; ++j)
      degens[n].push_back(induced(out.levels[n], out.levels[n + 1], d, [&](const SimplicialCategory& c) -> const FunctorMap& {
        return c.degeneracy(n, j);
      }));
  }
  std::optional<std::vector<int>> bp;
  if (basepoint_from) {
    bp.emplace();
    for (int n = 0; n <= levels; ++n)
      bp->push_back(out.levels[n].legs[*basepoint_from].objects[d.objects[*basepoint_from]->basepoint(n)]);
  }
  out.apex = share(SimplicialCategory::build(std::move(cats), std::move(faces), std::move(degens), std::move(bp)));
  for (std::size_t k = 0; k < d.objects.size(); ++k) {
    SimplicialFunctor leg{d.objects[k], out.apex, {}};
    for (int n = 0; n <= levels; ++n) leg.levels.push_back(out.levels[n].legs[k]);
    out.legs.push_back(std::move(leg));
  }
  return out;
}

SCatCocone pushout_scat(const SimplicialFunctor& f, const SimplicialFunctor& g, int bound,
                        std::optional<int> basepoint_from) {
  SCatDiagram d;
  d.objects = {f.source, f.target, g.target};
  d.arrows = {{0, 1, f}, {0, 2, g}};
  return colimit_scat(d, bound, basepoint_from);
}

SCatEqualizer equalizer_scat(const SimplicialFunctor& f, const SimplicialFunctor& g) {
  const SimplicialCategory& c = *f.source;
  std::vector<Subcategory> subs;
  for (int n = 0; n <= c.bound(); ++n)
    subs.push_back(equalizer_cat(Functor{c.level_ptr(n), f.target->level_ptr(n), f.levels.at(n)},
                                 Functor{c.level_ptr(n), g.target->level_ptr(n), g.levels.at(n)}));
  // Restrict a structure functor of c to the equalizers (it preserves them
  // because f and g commute with it).
  auto restrict = [&](const FunctorMap& s, const Subcategory& from, const Subcategory& to) {
    std::map<int, int> oi, mi;
    for (std::size_t k = 0; k < to.objects.size(); ++k) oi[to.objects[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < to.morphisms.size(); ++k) mi[to.morphisms[k]] = static_cast<int>(k);
    FunctorMap out;
    for (int x : from.objects) out.objects.push_back(oi.at(s.objects[x]));
    for (int m : from.morphisms) out.morphisms.push_back(mi.at(s.morphisms[m]));
    return out;
  };
  std::vector<CategoryPtr> cats;
  std::vector<std::vector<FunctorMap>> faces(c.bound() + 1), degens(c.bound() + 1);
  for (const auto& s : subs) cats.push_back(share(s.category));
  for (int n = 0; n <= c.bound(); ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) faces[n].push_back(restrict(c.face(n, i), subs[n], subs[n - 1]));
    for (int j = 0; n < c.bound() && j <= n; ++j)
      degens[n].push_back(restrict(c.degeneracy(n, j), subs[n], subs[n + 1]));
  }
  std::optional<std::vector<int>> bp;
  if (c.pointed()) {
    bp.emplace();
    for (int n = 0; n <= c.bound(); ++n) {
      auto it = std::find(subs[n].objects.begin(), subs[n].objects.end(), c.basepoint(n));
      if (it == subs[n].objects.end()) {
        bp.reset();
        break;
      }
      bp->push_back(static_cast<int>(it - subs[n].objects.begin()));
    }
  }
  SCatEqualizer out;
  out.object = share(SimplicialCategory::build(std::move(cats), std::move(faces), std::move(degens), std::move(bp)));
  out.inclusion = {out.object, f.source, {}};
  for (const auto& s : subs) out.inclusion.levels.push_back(s.inclusion());
  return out;
}

}  // namespace simpcat
