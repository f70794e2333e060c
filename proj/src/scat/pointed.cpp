#include "simpcat/scat/pointed.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "simpcat/sset/standard.hpp"

namespace simpcat {

SimplicialCategory tensor_rho(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice choice,
                              int closure_bound) {
  return product_scat(c, rho(x, choice, closure_bound));
}

SimplicialCategory add_basepoint(const SimplicialCategory& c) {
  const CategoryPtr point = share(terminal_category());
  auto shift = [](const FunctorMap& f) {
    FunctorMap out{{0}, {0}};
    for (int x : f.objects) out.objects.push_back(x + 1);
    for (int m : f.morphisms) out.morphisms.push_back(m + 1);
    return out;
  };
  std::vector<CategoryPtr> levels;
  std::vector<std::vector<FunctorMap>> faces(c.bound() + 1), degens(c.bound() + 1);
  for (int n = 0; n <= c.bound(); ++n) levels.push_back(share(coproduct_category({point, c.level_ptr(n)})));
  for (int n = 0; n <= c.bound(); ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) faces[n].push_back(shift(c.face(n, i)));
    for (int j = 0; n < c.bound() && j <= n; ++j) degens[n].push_back(shift(c.degeneracy(n, j)));
  }
  return SimplicialCategory::build(std::move(levels), std::move(faces), std::move(degens),
                                   std::vector<int>(c.bound() + 1, 0));
}

namespace {

// ∗ x R -> C x R through the basepoint of C.
SimplicialFunctor basepoint_times(SCatPtr r, SCatPtr c, SCatPtr product) {
  SimplicialFunctor f{r, product, {}};
  for (int n = 0; n <= r->bound(); ++n) {
    const Category& rn = r->level(n);
    const int bp = c->basepoint(n);
    FunctorMap m;
    for (int y = 0; y < rn.object_count(); ++y) m.objects.push_back(bp * rn.object_count() + y);
    for (int g = 0; g < rn.morphism_count(); ++g)
      m.morphisms.push_back(c->level(n).identity(bp) * rn.morphism_count() + g);
    f.levels.push_back(std::move(m));
  }
  return f;
}

// C x ρ(x0) -> C x R through the basepoint of R.
SimplicialFunctor times_basepoint(SCatPtr c, SCatPtr r, SCatPtr product) {
  SimplicialFunctor f{c, product, {}};
  for (int n = 0; n <= c->bound(); ++n) {
    const Category& rn = r->level(n);
    const int bp = r->basepoint(n);
    FunctorMap m;
    for (int a = 0; a < c->level(n).object_count(); ++a) m.objects.push_back(a * rn.object_count() + bp);
    for (int g = 0; g < c->level(n).morphism_count(); ++g)
      m.morphisms.push_back(g * rn.morphism_count() + rn.identity(bp));
    f.levels.push_back(std::move(m));
  }
  return f;
}

struct Factors {
  SCatPtr c;
  SCatPtr r;
  SCatPtr product;
  SCatPtr terminal;
};

Factors factors(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice choice, int closure_bound) {
  if (!c.pointed()) throw InputError("the simplicial category must be pointed");
  const SimplicialCategory rx = rho(x, choice, closure_bound);
  const int levels = std::min(c.bound(), rx.bound());
  Factors f;
  f.c = share(c.truncate(levels));
  f.r = share(rx.truncate(levels));
  f.product = share(product_scat(*f.c, *f.r));
  f.terminal = share(terminal_scat(levels));
  return f;
}

}  // namespace

SCatCocone smash_cocone(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice choice, int bound,
                        int closure_bound) {
  if (!x.basepoint()) throw InputError("smash: the simplicial set must be pointed");
  const Factors f = factors(c, x, choice, closure_bound);
  SCatDiagram d;
  d.objects = {f.product, f.r, f.c, f.terminal};
  d.arrows = {{1, 0, basepoint_times(f.r, f.c, f.product)},
              {2, 0, times_basepoint(f.c, f.r, f.product)},
              {1, 3, to_terminal(f.r, f.terminal)},
              {2, 3, to_terminal(f.c, f.terminal)}};
  return colimit_scat(d, bound, 3);
}

SimplicialCategory smash(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice choice, int bound,
                         int closure_bound) {
  return *smash_cocone(c, x, choice, bound, closure_bound).apex;
}

SCatCocone odot_cocone(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice choice, int bound,
                       int closure_bound) {
  const Factors f = factors(c, x, choice, closure_bound);
  SCatDiagram d;
  d.objects = {f.product, f.r, f.terminal};
  d.arrows = {{1, 0, basepoint_times(f.r, f.c, f.product)}, {1, 2, to_terminal(f.r, f.terminal)}};
  return colimit_scat(d, bound, 2);
}

SimplicialCategory odot(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice choice, int bound,
                        int closure_bound) {
  return *odot_cocone(c, x, choice, bound, closure_bound).apex;
}

SimplicialCategory suspend(const SimplicialCategory& c, RhoChoice choice, int bound, int closure_bound) {
  return smash(c, sphere(1, c.bound() + 3), choice, bound, closure_bound);
}

namespace {

// Δⁿ truncated at `levels`, with simplices indexed by vertex sequence.
struct Grid {
  SimplicialSet simplices;
  std::vector<std::map<std::vector<int>, int>> index;

  Grid(int n, int levels) : simplices(delta(n, levels)), index(levels + 1) {
    for (int m = 0; m <= levels; ++m)
      for (int s = 0; s < simplices.size(m); ++s) index[m].emplace(simplices.vertices(m, s), s);
  }
};

// Components θ[m][x] of a simplicial natural transformation.
using Components = std::vector<std::vector<int>>;

class TransformationSearch {
 public:
  TransformationSearch(const SimplicialCategory& s, const SimplicialCategory& c, std::vector<bool> fixed_level0,
                       std::uint64_t cap)
      : s_(s), c_(c), cap_(cap) {
    incident_.resize(s.bound() + 1);
    fixed_.resize(s.bound() + 1);
    for (int m = 0; m <= s.bound(); ++m) {
      const Category& sm = s.level(m);
      incident_[m].resize(sm.object_count());
      for (int u = 0; u < sm.morphism_count(); ++u)
        incident_[m][std::max(sm.source(u), sm.target(u))].push_back(u);
      fixed_[m].assign(sm.object_count(), false);
    }
    fixed_[0] = std::move(fixed_level0);
    for (int m = 1; m <= s.bound(); ++m)
      for (int j = 0; j < m; ++j)
        for (std::size_t y = 0; y < fixed_[m - 1].size(); ++y)
          if (fixed_[m - 1][y]) fixed_[m][s.degeneracy(m - 1, j).objects[y]] = true;
  }

  // Objects of s over the basepoint have identity components.
  void for_each(const std::vector<FunctorMap>& f, const std::vector<FunctorMap>& g,
                const std::function<void(const Components&)>& visit) {
    Components theta(s_.bound() + 1);
    for (int m = 0; m <= s_.bound(); ++m) theta[m].assign(s_.level(m).object_count(), -1);
    level(f, g, theta, 0, visit);
  }

 private:
  void level(const std::vector<FunctorMap>& f, const std::vector<FunctorMap>& g, Components& theta, int m,
             const std::function<void(const Components&)>& visit) {
    if (m > s_.bound()) {
      visit(theta);
      return;
    }
    std::vector<int> forced(s_.level(m).object_count(), -1);
    for (int j = 0; m >= 1 && j < m; ++j) {
      const FunctorMap& ss = s_.degeneracy(m - 1, j);
      const FunctorMap& cs = c_.degeneracy(m - 1, j);
      for (std::size_t y = 0; y < ss.objects.size(); ++y) {
        int& slot = forced[ss.objects[y]];
        const int want = cs.morphisms[theta[m - 1][y]];
        if (slot >= 0 && slot != want) return;
        slot = want;
      }
    }
    object(f, g, theta, m, 0, forced, visit);
    std::fill(theta[m].begin(), theta[m].end(), -1);
  }

  void object(const std::vector<FunctorMap>& f, const std::vector<FunctorMap>& g, Components& theta, int m, int x,
              const std::vector<int>& forced, const std::function<void(const Components&)>& visit) {
    const Category& sm = s_.level(m);
    if (x == sm.object_count()) {
      level(f, g, theta, m + 1, visit);
      return;
    }
    const Category& cm = c_.level(m);
    const int from = f[m].objects[x];
    const int to = g[m].objects[x];
    std::vector<int> candidates;
    if (forced[x] >= 0)
      candidates = {forced[x]};
    else if (fixed_[m][x])
      candidates = {cm.identity(from)};
    else
      candidates = cm.hom(from, to);
    for (int t : candidates) {
      if (cap_ && ++counter_ > cap_) throw BoundExceeded("transformation search exceeded the cap");
      if (cm.source(t) != from || cm.target(t) != to) continue;
      if (fixed_[m][x] && t != cm.identity(from)) continue;
      bool ok = true;
      for (int i = 0; ok && m >= 1 && i <= m; ++i)
        ok = c_.face(m, i).morphisms[t] == theta[m - 1][s_.face(m, i).objects[x]];
      theta[m][x] = t;
      for (int u : incident_[m][x]) {
        if (!ok) break;
        const int a = sm.source(u), b = sm.target(u);
        ok = cm.compose(g[m].morphisms[u], theta[m][a]) == cm.compose(theta[m][b], f[m].morphisms[u]);
      }
      if (ok) object(f, g, theta, m, x + 1, forced, visit);
    }
    theta[m][x] = -1;
  }

  const SimplicialCategory& s_;
  const SimplicialCategory& c_;
  std::uint64_t cap_;
  std::uint64_t counter_ = 0;
  std::vector<std::vector<std::vector<int>>> incident_;
  std::vector<std::vector<bool>> fixed_;
};

std::vector<int> flatten(const Components& t) {
  std::vector<int> out;
  for (const auto& level : t) out.insert(out.end(), level.begin(), level.end());
  return out;
}

struct CotensorLevel {
  SCatPtr source;  // ρX x Δⁿ
  std::vector<std::vector<FunctorMap>> functors;
  std::map<std::vector<FunctorMap>, int> functor_index;
  std::vector<Components> components;  // per morphism
  std::map<std::vector<int>, int> morphism_index;  // (source, target, flattened components)
  Category category;
  int basepoint = -1;

  std::vector<int> key(int f, int g, const Components& t) const {
    std::vector<int> k{f, g};
    const auto flat = flatten(t);
    k.insert(k.end(), flat.begin(), flat.end());
    return k;
  }
};

// Object map of id x φ: R x Δᵃ -> R x Δᵇ at level m, for φ on grid simplices.
std::vector<int> grid_product_map(int r_count, const std::vector<int>& phi, int target_grid) {
  std::vector<int> out;
  for (int a = 0; a < r_count; ++a)
    for (int s : phi) out.push_back(a * target_grid + s);
  return out;
}

}  // namespace

Cotensor cotensor(const SimplicialCategory& c, const SimplicialSet& x, RhoChoice choice, std::uint64_t cap,
                  int closure_bound) {
  if (!c.pointed() || !x.basepoint()) throw InputError("cotensor: both arguments must be pointed");
  const SimplicialCategory rx = rho(x, choice, closure_bound);
  const int levels = std::min(c.bound(), rx.bound());
  const SimplicialCategory r = rx.truncate(levels);
  const SimplicialCategory target = c.truncate(levels);
  std::vector<Grid> grids;
  for (int n = 0; n <= levels; ++n) grids.emplace_back(n, levels);

  std::vector<CotensorLevel> out(levels + 1);
  for (int n = 0; n <= levels; ++n) {
    CotensorLevel& lv = out[n];
    lv.source = share(product_scat(r, discrete_scat(grids[n].simplices)));
    const SimplicialCategory& s = *lv.source;
    SFunctorSearch search;
    search.cap = cap;
    search.object_ok = [&](int m, int y, int z) {
      return y / grids[n].simplices.size(m) != r.basepoint(m) || z == target.basepoint(m);
    };
    for_each_simplicial_functor(s, target, search, [&](const std::vector<FunctorMap>& f) {
      lv.functor_index.emplace(f, static_cast<int>(lv.functors.size()));
      lv.functors.push_back(f);
    });
    std::vector<bool> over_basepoint(s.level(0).object_count());
    for (std::size_t y = 0; y < over_basepoint.size(); ++y)
      over_basepoint[y] = static_cast<int>(y) / grids[n].simplices.size(0) == r.basepoint(0);
    TransformationSearch ts(s, target, over_basepoint, cap);
    std::vector<int> src, tgt, ids(lv.functors.size(), -1);
    for (std::size_t f = 0; f < lv.functors.size(); ++f)
      for (std::size_t g = 0; g < lv.functors.size(); ++g)
        ts.for_each(lv.functors[f], lv.functors[g], [&](const Components& t) {
          const int id = static_cast<int>(lv.components.size());
          lv.morphism_index.emplace(lv.key(static_cast<int>(f), static_cast<int>(g), t), id);
          lv.components.push_back(t);
          src.push_back(static_cast<int>(f));
          tgt.push_back(static_cast<int>(g));
          if (f == g) {
            bool identity = true;
            for (int m = 0; identity && m <= levels; ++m)
              for (std::size_t y = 0; identity && y < t[m].size(); ++y)
                identity = target.level(m).is_identity(t[m][y]);
            if (identity) ids[f] = id;
          }
        });
    for (int id : ids)
      if (id < 0) throw AuditFailure("cotensor: functor without an identity transformation");
    lv.category = Category::build(static_cast<int>(lv.functors.size()), src, tgt, ids, [&](int g, int f) {
      Components t = lv.components[f];
      for (int m = 0; m <= levels; ++m)
        for (std::size_t y = 0; y < t[m].size(); ++y)
          t[m][y] = target.level(m).compose(lv.components[g][m][y], t[m][y]);
      return lv.morphism_index.at(lv.key(src[f], tgt[g], t));
    });
    std::vector<FunctorMap> constant;
    for (int m = 0; m <= levels; ++m) {
      const int bp = target.basepoint(m);
      constant.push_back({std::vector<int>(s.level(m).object_count(), bp),
                          std::vector<int>(s.level(m).morphism_count(), target.level(m).identity(bp))});
    }
    const auto it = lv.functor_index.find(constant);
    if (it == lv.functor_index.end()) throw AuditFailure("cotensor: constant functor missing");
    lv.basepoint = it->second;
  }

  // Precomposition with id x φ for a cosimplicial operator φ: Δᵃ -> Δᵇ given on vertices.
  auto precompose = [&](int a, int b, const std::function<int(int)>& phi) {
    // Discrete grids number morphisms like objects, so one grid map serves both.
    std::vector<std::vector<int>> obj(levels + 1), mor(levels + 1);
    for (int m = 0; m <= levels; ++m) {
      std::vector<int> on_grid;
      for (int s = 0; s < grids[a].simplices.size(m); ++s) {
        auto v = grids[a].simplices.vertices(m, s);
        for (int& k : v) k = phi(k);
        on_grid.push_back(grids[b].index[m].at(v));
      }
      obj[m] = grid_product_map(r.level(m).object_count(), on_grid, grids[b].simplices.size(m));
      mor[m] = grid_product_map(r.level(m).morphism_count(), on_grid, grids[b].simplices.size(m));
    }
    const CotensorLevel& from = out[b];
    const CotensorLevel& to = out[a];
    FunctorMap result;
    for (const auto& f : from.functors) {
      std::vector<FunctorMap> g(levels + 1);
      for (int m = 0; m <= levels; ++m) {
        for (int y : obj[m]) g[m].objects.push_back(f[m].objects[y]);
        for (int u : mor[m]) g[m].morphisms.push_back(f[m].morphisms[u]);
      }
      result.objects.push_back(to.functor_index.at(g));
    }
    for (std::size_t k = 0; k < from.components.size(); ++k) {
      Components t(levels + 1);
      for (int m = 0; m <= levels; ++m)
        for (int y : obj[m]) t[m].push_back(from.components[k][m][y]);
      result.morphisms.push_back(to.morphism_index.at(
          to.key(result.objects[from.category.source(static_cast<int>(k))],
                 result.objects[from.category.target(static_cast<int>(k))], t)));
    }
    return result;
  };

  std::vector<CategoryPtr> cats;
  std::vector<std::vector<FunctorMap>> faces(levels + 1), degens(levels + 1);
  std::vector<int> bp;
  for (const auto& lv : out) {
    cats.push_back(share(lv.category));
    bp.push_back(lv.basepoint);
  }
  for (int n = 0; n <= levels; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i)
      faces[n].push_back(precompose(n - 1, n, [i](int v) { return v < i ? v : v + 1; }));
    for (int j = 0; n < levels && j <= n; ++j)
      degens[n].push_back(precompose(n + 1, n, [j](int v) { return v <= j ? v : v - 1; }));
  }
  Cotensor result;
  result.category = SimplicialCategory::build(std::move(cats), std::move(faces), std::move(degens), std::move(bp));
  for (auto& lv : out) result.functors.push_back(std::move(lv.functors));
  return result;
}

Cotensor loop(const SimplicialCategory& c, RhoChoice choice, std::uint64_t cap, int closure_bound) {
  return cotensor(c, sphere(1, c.bound() + 3), choice, cap, closure_bound);
}

}  // namespace simpcat
