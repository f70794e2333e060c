#include "simpcat/cat/operations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

namespace simpcat {

Subcategory iso_subgroupoid(const Category& c) {
  std::vector<bool> objects(c.object_count(), true), morphisms(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f) morphisms[f] = c.inverse(f) >= 0;
  return subcategory(c, objects, morphisms);
}

NerveChains::NerveChains(const Category& c, int bound) : c_(&c), chains_(bound + 1), index_(bound + 1) {
  for (int a = 0; a < c.object_count(); ++a) chains_[0].push_back({a});
  std::vector<int> all;
  for (int f = 0; f < c.morphism_count(); ++f) all.push_back(f);
  for (int k = 1; k <= bound; ++k) {
    std::vector<int> cur(k);
    auto extend = [&](auto& self, int pos) -> void {
      if (pos == k) {
        chains_[k].push_back(cur);
        return;
      }
      const std::vector<int>& next = pos == 0 ? all : c.out(c.target(cur[pos - 1]));
      for (int f : next) {
        cur[pos] = f;
        self(self, pos + 1);
      }
    };
    extend(extend, 0);
  }
  for (int k = 0; k <= bound; ++k)
    for (int id = 0; id < static_cast<int>(chains_[k].size()); ++id) index_[k].emplace(chains_[k][id], id);
}

int NerveChains::lookup(int k, const std::vector<int>& chain) const {
  auto it = index_.at(k).find(chain);
  if (it == index_[k].end()) throw InputError("not a chain of the nerve");
  return it->second;
}

std::vector<int> NerveChains::face(int k, int i, const std::vector<int>& ch) const {
  if (k == 1) return {i == 0 ? c_->target(ch[0]) : c_->source(ch[0])};
  std::vector<int> out;
  for (int t = 0; t < k; ++t) {
    if (t == 0 && i == 0) continue;
    if (t == k - 1 && i == k) continue;
    if (i > 0 && i < k && t == i - 1) {
      out.push_back(c_->compose(ch[i], ch[i - 1]));
      ++t;
      continue;
    }
    out.push_back(ch[t]);
  }
  return out;
}

std::vector<int> NerveChains::degeneracy(int k, int j, const std::vector<int>& ch) const {
  if (k == 0) return {c_->identity(ch[0])};
  const int obj = j == 0 ? c_->source(ch[0]) : c_->target(ch[j - 1]);
  std::vector<int> out = ch;
  out.insert(out.begin() + j, c_->identity(obj));
  return out;
}

std::vector<int> NerveChains::map_chain(int k, const std::vector<int>& ch, const FunctorMap& f) {
  std::vector<int> out = ch;
  for (int& m : out) m = k == 0 ? f.objects[m] : f.morphisms[m];
  return out;
}

SimplicialSet nerve(const Category& c, int bound, std::optional<int> basepoint) {
  if (bound < 0) throw InputError("negative bound");
  NerveChains idx(c, bound);
  std::vector<int> sizes(bound + 1);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    sizes[k] = idx.size(k);
    if (k > 0) {
      faces[k].assign(k + 1, std::vector<int>(sizes[k]));
      for (int i = 0; i <= k; ++i)
        for (int id = 0; id < sizes[k]; ++id)
          faces[k][i][id] = idx.lookup(k - 1, idx.face(k, i, idx.chain(k, id)));
    }
    if (k < bound) {
      degens[k].assign(k + 1, std::vector<int>(sizes[k]));
      for (int j = 0; j <= k; ++j)
        for (int id = 0; id < sizes[k]; ++id)
          degens[k][j][id] = idx.lookup(k + 1, idx.degeneracy(k, j, idx.chain(k, id)));
    }
  }
  return SimplicialSet::from_tables(bound, sizes, std::move(faces), std::move(degens), basepoint);
}

std::vector<int> nerve_chain(const Category& c, int k, int id) { return NerveChains(c, k).chain(k, id); }

SimplicialMap nerve_map(const Functor& f, SSetPtr source_nerve, SSetPtr target_nerve) {
  const int bound = source_nerve->bound();
  NerveChains from(*f.source, bound);
  NerveChains to(*f.target, bound);
  SimplicialMap g{source_nerve, target_nerve, {}};
  g.image.resize(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    for (int id = 0; id < from.size(k); ++id) {
      g.image[k].push_back(to.lookup(k, NerveChains::map_chain(k, from.chain(k, id), f.map)));
    }
  }
  return g;
}

SimplicialSet nerve_iso(const Category& c, int bound, std::optional<int> basepoint) {
  return nerve(iso_subgroupoid(c).category, bound, basepoint);
}

EquivalenceVerdict check_equivalence(const Functor& f) {
  const Category& s = *f.source;
  const Category& t = *f.target;
  EquivalenceVerdict v;
  v.fully_faithful = true;
  for (int a = 0; a < s.object_count() && v.fully_faithful; ++a) {
    for (int b = 0; b < s.object_count(); ++b) {
      const auto src = s.hom(a, b);
      const auto tgt = t.hom(f.object(a), f.object(b));
      std::vector<int> images;
      for (int m : src) images.push_back(f.morphism(m));
      std::sort(images.begin(), images.end());
      const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      if (!injective || images.size() != tgt.size()) {
        v.fully_faithful = false;
        v.witness = "hom(" + std::to_string(a) + ", " + std::to_string(b) + ") is not mapped bijectively";
        break;
      }
    }
  }
  v.essentially_surjective = true;
  for (int d = 0; d < t.object_count(); ++d) {
    bool hit = false;
    for (int a = 0; a < s.object_count() && !hit; ++a)
      for (int m : t.hom(f.object(a), d))
        if (t.inverse(m) >= 0) {
          hit = true;
          break;
        }
    if (!hit) {
      v.essentially_surjective = false;
      if (v.witness.empty()) v.witness = "object " + std::to_string(d) + " is not in the essential image";
      break;
    }
  }
  return v;
}

std::uint64_t for_each_functor(const Category& c, const Category& d, const FunctorSearch& search,
                               const std::function<void(const FunctorMap&)>& visit) {
  std::uint64_t local = 0, found = 0;
  std::uint64_t& tried = search.counter ? *search.counter : local;
  auto tick = [&] {
    if (search.cap && ++tried > search.cap) throw BoundExceeded("functor enumeration cap exceeded");
  };
  // Objects in id order, each followed by the morphisms whose later endpoint
  // it is, so that a bad object image is rejected before the next is tried.
  std::vector<std::vector<int>> block(c.object_count());
  for (int f = 0; f < c.morphism_count(); ++f) block[std::max(c.source(f), c.target(f))].push_back(f);
  std::vector<int> order, pos(c.morphism_count());
  for (const auto& b : block)
    for (int f : b) {
      pos[f] = static_cast<int>(order.size());
      order.push_back(f);
    }
  // Composition constraints g o f = h, checked once the last of the three is assigned.
  std::vector<std::vector<std::array<int, 3>>> checks(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.out(c.target(f))) {
      const int h = c.compose(g, f);
      checks[std::max({pos[f], pos[g], pos[h]})].push_back({g, f, h});
    }
  // Step k >= 0 assigns morphism steps[k]; step -(a + 1) assigns object a.
  std::vector<int> steps;
  for (int a = 0; a < c.object_count(); ++a) {
    steps.push_back(-(a + 1));
    steps.insert(steps.end(), block[a].begin(), block[a].end());
  }
  FunctorMap cur;
  cur.objects.assign(c.object_count(), -1);
  cur.morphisms.assign(c.morphism_count(), -1);
  auto assign = [&](auto& self, std::size_t k) -> void {
    if (k == steps.size()) {
      ++found;
      visit(cur);
      return;
    }
    if (steps[k] < 0) {
      const int a = -steps[k] - 1;
      for (int x = 0; x < d.object_count(); ++x) {
        if (search.object_ok && !search.object_ok(a, x)) continue;
        tick();
        cur.objects[a] = x;
        self(self, k + 1);
      }
      cur.objects[a] = -1;
      return;
    }
    const int f = steps[k];
    std::vector<int> candidates;
    if (c.is_identity(f)) candidates = {d.identity(cur.objects[c.source(f)])};
    else candidates = d.hom(cur.objects[c.source(f)], cur.objects[c.target(f)]);
    for (int m : candidates) {
      if (search.morphism_ok && !search.morphism_ok(f, m)) continue;
      tick();
      cur.morphisms[f] = m;
      bool ok = true;
      for (const auto& [g, ff, h] : checks[pos[f]])
        if (cur.morphisms[h] != d.compose(cur.morphisms[g], cur.morphisms[ff])) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
    cur.morphisms[f] = -1;
  };
  assign(assign, 0);
  return found;
}

std::vector<FunctorMap> enumerate_functors(const Category& c, const Category& d, std::uint64_t cap,
                                           const std::vector<int>& pinned_objects) {
  std::vector<FunctorMap> out;
  FunctorSearch search;
  search.cap = cap;
  if (!pinned_objects.empty())
    search.object_ok = [&](int a, int x) {
      return a >= static_cast<int>(pinned_objects.size()) || pinned_objects[a] < 0 || pinned_objects[a] == x;
    };
  for_each_functor(c, d, search, [&](const FunctorMap& f) { out.push_back(f); });
  return out;
}

FunctorCategory functor_category(const Category& c, const Category& d, std::uint64_t cap) {
  FunctorCategory fc;
  fc.functors = enumerate_functors(c, d, cap);
  const int nf = static_cast<int>(fc.functors.size());
  std::uint64_t tried = 0;
  std::vector<int> src, tgt, ids(nf);
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < nf; ++b) {
      const FunctorMap& F = fc.functors[a];
      const FunctorMap& G = fc.functors[b];
      std::vector<int> eta(c.object_count(), -1);
      auto assign = [&](auto& self, int x) -> void {
        if (x == c.object_count()) {
          index.emplace(std::tuple{a, b, eta}, static_cast<int>(src.size()));
          src.push_back(a);
          tgt.push_back(b);
          fc.components.push_back(eta);
          return;
        }
        for (int m : d.hom(F.objects[x], G.objects[x])) {
          if (cap && ++tried > cap) throw BoundExceeded("natural transformation cap exceeded");
          eta[x] = m;
          bool ok = true;
          for (int f = 0; f < c.morphism_count() && ok; ++f) {
            const int s = c.source(f), t = c.target(f);
            if (std::max(s, t) != x) continue;
            ok = d.compose(G.morphisms[f], eta[s]) == d.compose(eta[t], F.morphisms[f]);
          }
          if (ok) self(self, x + 1);
        }
        eta[x] = -1;
      };
      assign(assign, 0);
    }
  }
  for (int a = 0; a < nf; ++a) {
    std::vector<int> eta(c.object_count());
    for (int x = 0; x < c.object_count(); ++x) eta[x] = d.identity(fc.functors[a].objects[x]);
    ids[a] = index.at({a, a, eta});
  }
  fc.category = Category::build(nf, src, tgt, ids, [&](int g, int f) {
    std::vector<int> eta(c.object_count());
    for (int x = 0; x < c.object_count(); ++x) eta[x] = d.compose(fc.components[g][x], fc.components[f][x]);
    return index.at({src[f], tgt[g], eta});
  });
  return fc;
}

Subcategory equalizer_cat(const Functor& f, const Functor& g) {
  const Category& c = *f.source;
  if (g.source.get() != f.source.get() && !(*g.source == c)) throw InputError("equalizer: functors not parallel");
  std::vector<bool> objects(c.object_count()), morphisms(c.morphism_count());
  for (int a = 0; a < c.object_count(); ++a) objects[a] = f.object(a) == g.object(a);
  for (int m = 0; m < c.morphism_count(); ++m) morphisms[m] = f.morphism(m) == g.morphism(m);
  return subcategory(c, objects, morphisms);
}

}  // namespace simpcat
