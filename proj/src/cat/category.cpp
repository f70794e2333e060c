#include "simpcat/cat/category.hpp"

#include <sstream>

namespace simpcat {

Category Category::build(int objects, std::vector<int> source, std::vector<int> target,
                         std::vector<int> identity,
                         const std::function<int(int g, int f)>& compose) {
  const int m = static_cast<int>(source.size());
  if (objects < 0) throw AuditFailure("negative object count");
  if (static_cast<int>(target.size()) != m || static_cast<int>(identity.size()) != objects)
    throw AuditFailure("category table sizes disagree");
  for (int f = 0; f < m; ++f)
    if (source[f] < 0 || source[f] >= objects || target[f] < 0 || target[f] >= objects)
      throw AuditFailure("morphism " + std::to_string(f) + " has an endpoint outside the objects");
  for (int a = 0; a < objects; ++a) {
    const int i = identity[a];
    if (i < 0 || i >= m || source[i] != a || target[i] != a)
      throw AuditFailure("identity of object " + std::to_string(a) + " is not an endomorphism of it");
  }
  Category c;
  c.objects_ = objects;
  c.source_ = std::move(source);
  c.target_ = std::move(target);
  c.identity_ = std::move(identity);
  c.out_.assign(objects, {});
  c.pos_in_out_.assign(m, 0);
  for (int f = 0; f < m; ++f) {
    c.pos_in_out_[f] = static_cast<int>(c.out_[c.source_[f]].size());
    c.out_[c.source_[f]].push_back(f);
  }
  c.comp_.assign(m, {});
  for (int f = 0; f < m; ++f) {
    const auto& next = c.out_[c.target_[f]];
    c.comp_[f].resize(next.size());
    for (std::size_t k = 0; k < next.size(); ++k) {
      const int g = next[k];
      const int h = compose(g, f);
      if (h < 0 || h >= m || c.source_[h] != c.source_[f] || c.target_[h] != c.target_[g]) {
        std::ostringstream os;
        os << "composite of " << g << " after " << f << " has wrong endpoints";
        throw AuditFailure(os.str());
      }
      c.comp_[f][k] = h;
    }
  }
  return c;
}

std::vector<int> Category::hom(int a, int b) const {
  std::vector<int> out;
  for (int f : out_[a])
    if (target_[f] == b) out.push_back(f);
  return out;
}

std::vector<std::string> Category::validate(std::size_t limit) const {
  std::vector<std::string> out;
  auto report = [&](std::string s) {
    if (out.size() < limit) out.push_back(std::move(s));
  };
  for (int f = 0; f < morphism_count(); ++f) {
    if (compose(f, identity_[source_[f]]) != f)
      report("f o id != f for f = " + std::to_string(f));
    if (compose(identity_[target_[f]], f) != f)
      report("id o f != f for f = " + std::to_string(f));
  }
  for (int f = 0; f < morphism_count(); ++f)
    for (int g : out_[target_[f]])
      for (int h : out_[target_[g]])
        if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
          std::ostringstream os;
          os << "associativity fails for (" << h << ", " << g << ", " << f << ")";
          report(os.str());
        }
  return out;
}

int Category::inverse(int f) const {
  for (int g : out_[target_[f]])
    if (target_[g] == source_[f] && compose(g, f) == identity_[source_[f]] &&
        compose(f, g) == identity_[target_[f]])
      return g;
  return -1;
}

bool Category::is_groupoid() const {
  for (int f = 0; f < morphism_count(); ++f)
    if (inverse(f) < 0) return false;
  return true;
}

Category discrete_category(int objects) {
  std::vector<int> ids(objects);
  for (int a = 0; a < objects; ++a) ids[a] = a;
  return Category::build(objects, ids, ids, ids, [](int, int f) { return f; });
}

Category terminal_category() { return discrete_category(1); }

Category chaotic_category(int n) {
  std::vector<int> src(n * n), tgt(n * n), ids(n);
  for (int a = 0; a < n; ++a) {
    ids[a] = a * n + a;
    for (int b = 0; b < n; ++b) {
      src[a * n + b] = a;
      tgt[a * n + b] = b;
    }
  }
  return Category::build(n, src, tgt, ids, [n](int g, int f) { return (f / n) * n + g % n; });
}

Category cyclic_group(int order) {
  if (order < 1) throw InputError("group order must be positive");
  std::vector<int> zeros(order, 0);
  return Category::build(1, zeros, zeros, {0}, [order](int g, int f) { return (g + f) % order; });
}

Category ordinal_category(int n) {
  std::vector<int> src, tgt, ids(n + 1);
  std::vector<std::vector<int>> id_of(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      id_of[i][j] = static_cast<int>(src.size());
      src.push_back(i);
      tgt.push_back(j);
    }
  for (int i = 0; i <= n; ++i) ids[i] = id_of[i][i];
  return Category::build(n + 1, src, tgt, ids,
                         [&](int g, int f) { return id_of[src[f]][tgt[g]]; });
}

Category coproduct_category(const std::vector<CategoryPtr>& parts) {
  std::vector<int> src, tgt, ids, obj_off, mor_off, part_of;
  int objects = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Category& c = *parts[p];
    obj_off.push_back(objects);
    mor_off.push_back(static_cast<int>(src.size()));
    for (int a = 0; a < c.object_count(); ++a) ids.push_back(mor_off.back() + c.identity(a));
    for (int f = 0; f < c.morphism_count(); ++f) {
      src.push_back(objects + c.source(f));
      tgt.push_back(objects + c.target(f));
      part_of.push_back(static_cast<int>(p));
    }
    objects += c.object_count();
  }
  return Category::build(objects, src, tgt, ids, [&](int g, int f) {
    const int p = part_of[f];
    return mor_off[p] + parts[p]->compose(g - mor_off[p], f - mor_off[p]);
  });
}

Category product_category(const Category& a, const Category& b) {
  const int bo = b.object_count();
  const int bm = b.morphism_count();
  std::vector<int> src, tgt, ids(a.object_count() * bo);
  for (int f = 0; f < a.morphism_count(); ++f)
    for (int g = 0; g < bm; ++g) {
      src.push_back(a.source(f) * bo + b.source(g));
      tgt.push_back(a.target(f) * bo + b.target(g));
    }
  for (int x = 0; x < a.object_count(); ++x)
    for (int y = 0; y < bo; ++y) ids[x * bo + y] = a.identity(x) * bm + b.identity(y);
  return Category::build(a.object_count() * bo, src, tgt, ids, [&](int h, int k) {
    return a.compose(h / bm, k / bm) * bm + b.compose(h % bm, k % bm);
  });
}

std::vector<std::string> audit_functor(const Category& s, const Category& t, const FunctorMap& map,
                                       std::size_t limit) {
  std::vector<std::string> out;
  if (static_cast<int>(map.objects.size()) != s.object_count() ||
      static_cast<int>(map.morphisms.size()) != s.morphism_count()) {
    out.push_back("functor tables have the wrong size");
    return out;
  }
  for (int a : map.objects)
    if (a < 0 || a >= t.object_count()) {
      out.push_back("object image out of range");
      return out;
    }
  for (int f : map.morphisms)
    if (f < 0 || f >= t.morphism_count()) {
      out.push_back("morphism image out of range");
      return out;
    }
  auto report = [&](std::string msg) {
    if (out.size() < limit) out.push_back(std::move(msg));
  };
  for (int a = 0; a < s.object_count(); ++a)
    if (map.morphisms[s.identity(a)] != t.identity(map.objects[a]))
      report("identity of object " + std::to_string(a) + " not preserved");
  for (int f = 0; f < s.morphism_count(); ++f) {
    const int h = map.morphisms[f];
    if (t.source(h) != map.objects[s.source(f)] || t.target(h) != map.objects[s.target(f)])
      report("endpoints of morphism " + std::to_string(f) + " not preserved");
  }
  if (!out.empty()) return out;
  for (int f = 0; f < s.morphism_count(); ++f)
    for (int g : s.out(s.target(f)))
      if (map.morphisms[s.compose(g, f)] != t.compose(map.morphisms[g], map.morphisms[f]))
        report("composite " + std::to_string(g) + " o " + std::to_string(f) + " not preserved");
  return out;
}

std::vector<std::string> Functor::audit(std::size_t limit) const {
  return audit_functor(*source, *target, map, limit);
}

FunctorMap identity_map(const Category& c) {
  FunctorMap m;
  for (int a = 0; a < c.object_count(); ++a) m.objects.push_back(a);
  for (int f = 0; f < c.morphism_count(); ++f) m.morphisms.push_back(f);
  return m;
}

FunctorMap compose_maps(const FunctorMap& g, const FunctorMap& f) {
  FunctorMap h;
  for (int a : f.objects) h.objects.push_back(g.objects.at(a));
  for (int m : f.morphisms) h.morphisms.push_back(g.morphisms.at(m));
  return h;
}

Functor Functor::identity(CategoryPtr c) {
  FunctorMap m = identity_map(*c);
  return {c, c, std::move(m)};
}

Functor Functor::compose(const Functor& g, const Functor& f) {
  return {f.source, g.target, compose_maps(g.map, f.map)};
}

Subcategory subcategory(const Category& c, const std::vector<bool>& keep_objects,
                        const std::vector<bool>& keep_morphisms) {
  Subcategory s;
  std::vector<int> obj_index(c.object_count(), -1), mor_index(c.morphism_count(), -1);
  for (int a = 0; a < c.object_count(); ++a)
    if (keep_objects[a]) {
      obj_index[a] = static_cast<int>(s.objects.size());
      s.objects.push_back(a);
    }
  for (int f = 0; f < c.morphism_count(); ++f)
    if (keep_morphisms[f] && keep_objects[c.source(f)] && keep_objects[c.target(f)]) {
      mor_index[f] = static_cast<int>(s.morphisms.size());
      s.morphisms.push_back(f);
    }
  std::vector<int> src, tgt, ids;
  for (int f : s.morphisms) {
    src.push_back(obj_index[c.source(f)]);
    tgt.push_back(obj_index[c.target(f)]);
  }
  for (int a : s.objects) {
    if (mor_index[c.identity(a)] < 0) throw InputError("subcategory misses an identity");
    ids.push_back(mor_index[c.identity(a)]);
  }
  s.category = Category::build(static_cast<int>(s.objects.size()), src, tgt, ids, [&](int g, int f) {
    const int h = mor_index[c.compose(s.morphisms[g], s.morphisms[f])];
    if (h < 0) throw InputError("subcategory not closed under composition");
    return h;
  });
  return s;
}

}  // namespace simpcat
