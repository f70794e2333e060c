#include "simpcat/cat/presented.hpp"

#include <algorithm>
#include <deque>

#include "simpcat/union_find.hpp"

namespace simpcat {

int Presentation::add_generator(int source, int target) {
  if (source < 0 || source >= objects || target < 0 || target >= objects)
    throw InputError("generator endpoint outside the objects");
  gen_source.push_back(source);
  gen_target.push_back(target);
  return generator_count() - 1;
}

void Presentation::relate(int source, std::vector<int> lhs, std::vector<int> rhs) {
  relations.push_back({source, std::move(lhs), std::move(rhs)});
}

int Presentation::trace_objects(int start, const std::vector<int>& word, bool allow_inverse) const {
  int at = start;
  for (int letter : word) {
    const int g = letter >= 0 ? letter : -letter - 1;
    if (g >= generator_count()) throw InputError("letter names an unknown generator");
    if (letter < 0 && !allow_inverse) throw InputError("inverse letter in a category presentation");
    const int from = letter >= 0 ? gen_source[g] : gen_target[g];
    if (from != at) throw InputError("relation word is not a path");
    at = letter >= 0 ? gen_target[g] : gen_source[g];
  }
  return at;
}

namespace {

void validate(const Presentation& p, bool groupoid) {
  for (const auto& r : p.relations) {
    if (r.source < 0 || r.source >= p.objects) throw InputError("relation source outside the objects");
    if (p.trace_objects(r.source, r.lhs, groupoid) != p.trace_objects(r.source, r.rhs, groupoid))
      throw InputError("relation sides end at different objects");
  }
}

int letter_slot(int letter) { return letter >= 0 ? 2 * letter : 2 * (-letter - 1) + 1; }

// Coset enumeration of hom(start, -): nodes are morphisms out of `start`,
// edges are letters, every relation is traced at every node and the
// resulting coincidences are merged.
class Enumerator {
 public:
  Enumerator(const Presentation& p, bool groupoid, int start, std::size_t limit)
      : p_(p), limit_(limit), letters_(p.objects), slot_pos_(2 * p.generator_count(), -1),
        rel_by_object_(p.objects) {
    for (int g = 0; g < p.generator_count(); ++g) {
      slot_pos_[letter_slot(g)] = static_cast<int>(letters_[p.gen_source[g]].size());
      letters_[p.gen_source[g]].push_back(g);
    }
    if (groupoid)
      for (int g = 0; g < p.generator_count(); ++g) {
        const int inv = -g - 1;
        slot_pos_[letter_slot(inv)] = static_cast<int>(letters_[p.gen_target[g]].size());
        letters_[p.gen_target[g]].push_back(inv);
        extra_.push_back({p.gen_source[g], {g, inv}, {}});
        extra_.push_back({p.gen_target[g], {inv, g}, {}});
      }
    for (const auto& r : p.relations) rel_by_object_[r.source].push_back(&r);
    for (const auto& r : extra_) rel_by_object_[r.source].push_back(&r);
    new_node(start);
  }

  void run() {
    for (int i = 0; i < static_cast<int>(obj_.size()); ++i) {
      if (find(i) != i) continue;
      for (const auto* r : rel_by_object_[obj_[i]]) {
        if (find(i) != i) break;
        const int a = trace(i, r->lhs);
        const int b = trace(i, r->rhs);
        coincide(a, b);
      }
      if (find(i) != i) continue;
      for (std::size_t k = 0; k < letters_[obj_[i]].size(); ++k)
        if (next_[i][k] < 0) define(i, static_cast<int>(k));
    }
    compact();
  }

  const std::vector<int>& letters(int object) const { return letters_[object]; }
  int position(int letter) const { return slot_pos_[letter_slot(letter)]; }

  // Compacted result, numbered in shortlex (BFS) order; node 0 is the identity.
  std::vector<int> object;
  std::vector<std::vector<int>> table;
  std::vector<std::vector<int>> words;

  int follow(int node, const std::vector<int>& word) const {
    for (int letter : word) node = table[node][position(letter)];
    return node;
  }

 private:
  int new_node(int object_id) {
    obj_.push_back(object_id);
    next_.emplace_back(letters_[object_id].size(), -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    if (++live_ > limit_ || obj_.size() > 64 * limit_ + 4096)
      throw BoundExceeded("presented category exceeds the enumeration bound");
    return static_cast<int>(obj_.size()) - 1;
  }

  int find(int x) {
    int r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      const int n = parent_[x];
      parent_[x] = r;
      x = n;
    }
    return r;
  }

  void define(int node, int pos) {
    const int letter = letters_[obj_[node]][pos];
    const int g = letter >= 0 ? letter : -letter - 1;
    const int t = new_node(letter >= 0 ? p_.gen_target[g] : p_.gen_source[g]);
    next_[node][pos] = t;
  }

  int trace(int node, const std::vector<int>& word) {
    for (int letter : word) {
      node = find(node);
      const int pos = position(letter);
      if (next_[node][pos] < 0) define(node, pos);
      node = next_[node][pos];
    }
    return find(node);
  }

  void coincide(int a, int b) {
    std::deque<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      --live_;
      for (std::size_t k = 0; k < next_[y].size(); ++k) {
        const int t = next_[y][k];
        if (t < 0) continue;
        if (next_[x][k] < 0) next_[x][k] = t;
        else queue.emplace_back(next_[x][k], t);
      }
    }
  }

  void compact() {
    std::vector<int> id(obj_.size(), -1);
    std::vector<int> order{find(0)};
    id[order[0]] = 0;
    words.push_back({});
    for (std::size_t q = 0; q < order.size(); ++q) {
      const int n = order[q];
      for (std::size_t k = 0; k < next_[n].size(); ++k) {
        const int t = find(next_[n][k]);
        if (id[t] >= 0) continue;
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
        words.push_back(words[q]);
        words.back().push_back(letters_[obj_[n]][k]);
      }
    }
    for (int n : order) {
      object.push_back(obj_[n]);
      std::vector<int> row(next_[n].size());
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = id[find(next_[n][k])];
      table.push_back(std::move(row));
    }
  }

  const Presentation& p_;
  std::size_t limit_;
  std::size_t live_ = 0;
  std::vector<std::vector<int>> letters_;
  std::vector<int> slot_pos_;
  std::vector<Presentation::Relation> extra_;
  std::vector<std::vector<const Presentation::Relation*>> rel_by_object_;
  std::vector<int> obj_;
  std::vector<std::vector<int>> next_;
  std::vector<int> parent_;
};

std::size_t node_limit(int bound) { return 16 * static_cast<std::size_t>(std::max(bound, 0)) + 1024; }

// Collapses generators identified with each other or with identities by
// single-letter relations. map[g] is the new generator or -1 for an identity;
// rep[new] is an original generator of that class.
struct Simplified {
  Presentation p;
  std::vector<int> map;
  std::vector<int> rep;
};

Simplified simplify(const Presentation& p) {
  const int n = p.generator_count();
  UnionFind uf(n);
  std::vector<bool> trivial(n, false);
  auto rewrite = [&](const std::vector<int>& w) {
    std::vector<int> out;
    for (int g : w) {
      const int r = static_cast<int>(uf.find(g));
      if (!trivial[r]) out.push_back(r);
    }
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.relations) {
      const auto l = rewrite(r.lhs);
      const auto s = rewrite(r.rhs);
      if (l.size() == 1 && s.size() == 1) {
        const int a = static_cast<int>(uf.find(l[0])), b = static_cast<int>(uf.find(s[0]));
        if (a != b) {
          const bool t = trivial[a] || trivial[b];
          uf.unite(a, b);
          trivial[uf.find(a)] = t;
          changed = true;
        }
      } else if (l.size() + s.size() == 1) {
        const int a = static_cast<int>(uf.find(l.empty() ? s[0] : l[0]));
        if (!trivial[a]) {
          trivial[a] = true;
          changed = true;
        }
      }
    }
  }
  Simplified out;
  out.p.objects = p.objects;
  out.map.assign(n, -1);
  std::vector<int> new_id(n, -1);
  for (int g = 0; g < n; ++g) {
    const int r = static_cast<int>(uf.find(g));
    if (trivial[r]) continue;
    if (new_id[r] < 0) {
      new_id[r] = out.p.add_generator(p.gen_source[r], p.gen_target[r]);
      out.rep.push_back(r);
    }
    out.map[g] = new_id[r];
  }
  for (const auto& r : p.relations) {
    auto l = rewrite(r.lhs), s = rewrite(r.rhs);
    if (l == s) continue;
    for (int& g : l) g = new_id[g];
    for (int& g : s) g = new_id[g];
    out.p.relate(r.source, std::move(l), std::move(s));
  }
  return out;
}

}  // namespace

int MaterializedCategory::evaluate(int source, const std::vector<int>& word) const {
  int m = category.identity(source);
  for (int letter : word) {
    int step;
    if (letter >= 0) {
      step = generator_morphism.at(letter);
    } else {
      step = category.inverse(generator_morphism.at(-letter - 1));
      if (step < 0) throw InputError("inverse letter names a non-invertible morphism");
    }
    if (category.source(step) != category.target(m)) throw InputError("word is not a path");
    m = category.compose(step, m);
  }
  return m;
}

MaterializedCategory materialize_category(const Presentation& input, int bound) {
  validate(input, false);
  Simplified s = simplify(input);
  const Presentation& p = s.p;
  std::vector<Enumerator> parts;
  parts.reserve(p.objects);
  std::vector<int> offset;
  int total = 0;
  for (int a = 0; a < p.objects; ++a) {
    parts.emplace_back(p, false, a, node_limit(bound));
    parts.back().run();
    offset.push_back(total);
    total += static_cast<int>(parts.back().object.size());
    if (total > bound) throw BoundExceeded("presented category has more than " + std::to_string(bound) + " morphisms");
  }
  std::vector<int> src, tgt, ids, local;
  for (int a = 0; a < p.objects; ++a) {
    ids.push_back(offset[a]);
    for (std::size_t n = 0; n < parts[a].object.size(); ++n) {
      src.push_back(a);
      tgt.push_back(parts[a].object[n]);
      local.push_back(static_cast<int>(n));
    }
  }
  MaterializedCategory out;
  out.category = Category::build(p.objects, src, tgt, ids, [&](int g, int f) {
    const int a = src[f];
    return offset[a] + parts[a].follow(local[f], parts[tgt[f]].words[local[g]]);
  });
  for (int g = 0; g < input.generator_count(); ++g) {
    const int a = input.gen_source[g];
    const int ng = s.map[g];
    out.generator_morphism.push_back(ng < 0 ? ids[a] : offset[a] + parts[a].table[0][parts[a].position(ng)]);
  }
  for (int m = 0; m < total; ++m) {
    std::vector<int> w = parts[src[m]].words[local[m]];
    for (int& g : w) g = s.rep[g];
    out.words.push_back(std::move(w));
  }
  return out;
}

MaterializedCategory materialize_groupoid(const Presentation& p, int bound) {
  validate(p, true);
  const int n = p.objects;
  UnionFind comp(n);
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (letter, other end)
  for (int g = 0; g < p.generator_count(); ++g) {
    comp.unite(p.gen_source[g], p.gen_target[g]);
    adj[p.gen_source[g]].emplace_back(g, p.gen_target[g]);
    adj[p.gen_target[g]].emplace_back(-g - 1, p.gen_source[g]);
  }
  // BFS spanning forest; tree_word[a] is the tree path from the component root to a.
  std::vector<std::vector<int>> tree_word(n);
  std::vector<bool> seen(n, false), tree(p.generator_count(), false);
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (auto [letter, b] : adj[a]) {
        if (seen[b]) continue;
        seen[b] = true;
        tree[letter >= 0 ? letter : -letter - 1] = true;
        tree_word[b] = tree_word[a];
        tree_word[b].push_back(letter);
        queue.push_back(b);
      }
    }
  }
  // Vertex group of each component, on its non-tree generators.
  std::vector<int> root(n), members_before(n);
  std::vector<std::vector<int>> members(n);
  for (int a = 0; a < n; ++a) {
    root[a] = static_cast<int>(comp.find(a));
    members_before[a] = static_cast<int>(members[root[a]].size());
    members[root[a]].push_back(a);
  }
  std::vector<int> xgen(p.generator_count(), -1);
  std::vector<Presentation> groups(n);
  std::vector<std::vector<int>> xback(n);
  for (int g = 0; g < p.generator_count(); ++g) {
    if (tree[g]) continue;
    const int r = root[p.gen_source[g]];
    if (groups[r].objects == 0) groups[r].objects = 1;
    xgen[g] = groups[r].add_generator(0, 0);
    xback[r].push_back(g);
  }
  auto to_group = [&](const std::vector<int>& w) {
    std::vector<int> out;
    for (int letter : w) {
      const int g = letter >= 0 ? letter : -letter - 1;
      if (xgen[g] < 0) continue;
      out.push_back(letter >= 0 ? xgen[g] : -xgen[g] - 1);
    }
    return out;
  };
  for (const auto& rel : p.relations) {
    const int r = root[rel.source];
    if (groups[r].objects == 0) groups[r].objects = 1;
    groups[r].relate(0, to_group(rel.lhs), to_group(rel.rhs));
  }
  std::vector<std::unique_ptr<Enumerator>> group(n);
  long long total = 0;
  for (int r = 0; r < n; ++r) {
    if (root[r] != r) continue;
    if (groups[r].objects == 0) groups[r].objects = 1;
    group[r] = std::make_unique<Enumerator>(groups[r], true, 0, node_limit(bound));
    group[r]->run();
    const long long k = static_cast<long long>(members[r].size());
    total += k * k * static_cast<long long>(group[r]->object.size());
    if (total > bound) throw BoundExceeded("groupoid has more than " + std::to_string(bound) + " morphisms");
  }
  // Morphism (a, b, γ) is T_a^-1 . γ . T_b in path order, numbered by a, then b, then γ.
  std::vector<int> src, tgt, elem, offset(n);
  int count = 0;
  for (int a = 0; a < n; ++a) {
    offset[a] = count;
    const int r = root[a];
    const int order = static_cast<int>(group[r]->object.size());
    for (int b : members[r])
      for (int x = 0; x < order; ++x) {
        src.push_back(a);
        tgt.push_back(b);
        elem.push_back(x);
      }
    count += static_cast<int>(members[r].size()) * order;
  }
  auto id_of = [&](int a, int b, int x) {
    const int r = root[a];
    return offset[a] + members_before[b] * static_cast<int>(group[r]->object.size()) + x;
  };
  std::vector<int> ids(n);
  for (int a = 0; a < n; ++a) ids[a] = id_of(a, a, 0);
  MaterializedCategory out;
  out.category = Category::build(n, src, tgt, ids, [&](int g, int f) {
    const Enumerator& e = *group[root[src[f]]];
    return id_of(src[f], tgt[g], e.follow(elem[f], e.words[elem[g]]));
  });
  for (int g = 0; g < p.generator_count(); ++g) {
    const int a = p.gen_source[g], b = p.gen_target[g];
    const Enumerator& e = *group[root[a]];
    out.generator_morphism.push_back(id_of(a, b, xgen[g] < 0 ? 0 : e.table[0][e.position(xgen[g])]));
  }
  // Words are freely reduced; the vertex group letter of g reads T_s . g . T_t^-1.
  auto push = [](std::vector<int>& w, int letter) {
    if (!w.empty() && w.back() == -letter - 1) w.pop_back();
    else w.push_back(letter);
  };
  auto push_inverse_tree = [&](std::vector<int>& w, int a) {
    const auto& t = tree_word[a];
    for (auto it = t.rbegin(); it != t.rend(); ++it) push(w, -*it - 1);
  };
  auto push_tree = [&](std::vector<int>& w, int a) {
    for (int letter : tree_word[a]) push(w, letter);
  };
  for (int m = 0; m < count; ++m) {
    const int r = root[src[m]];
    std::vector<int> w;
    push_inverse_tree(w, src[m]);
    for (int letter : group[r]->words[elem[m]]) {
      const int g = xback[r][letter >= 0 ? letter : -letter - 1];
      const int from = letter >= 0 ? p.gen_source[g] : p.gen_target[g];
      const int to = letter >= 0 ? p.gen_target[g] : p.gen_source[g];
      push_tree(w, from);
      push(w, letter >= 0 ? g : -g - 1);
      push_inverse_tree(w, to);
    }
    push_tree(w, tgt[m]);
    out.words.push_back(std::move(w));
  }
  return out;
}

std::vector<int> edge_word(const SimplicialSet& x, int edge) {
  const auto& nd = x.nondegenerate(1);
  auto it = std::lower_bound(nd.begin(), nd.end(), edge);
  if (it != nd.end() && *it == edge) return {static_cast<int>(it - nd.begin())};
  return {};
}

Presentation edge_presentation(const SimplicialSet& x) {
  Presentation p;
  p.objects = x.size(0);
  if (x.bound() < 1) return p;
  for (int e : x.nondegenerate(1)) p.add_generator(x.face(1, 1, e), x.face(1, 0, e));
  if (x.bound() < 2) return p;
  for (int t : x.nondegenerate(2)) {
    std::vector<int> lhs = edge_word(x, x.face(2, 2, t));
    const auto tail = edge_word(x, x.face(2, 0, t));
    lhs.insert(lhs.end(), tail.begin(), tail.end());
    p.relate(x.face(1, 1, x.face(2, 2, t)), std::move(lhs), edge_word(x, x.face(2, 1, t)));
  }
  return p;
}

MaterializedCategory fundamental_groupoid(const SimplicialSet& x, int bound) {
  return materialize_groupoid(edge_presentation(x), bound);
}

FunctorMap fundamental_groupoid_map(const SimplicialMap& f, const MaterializedCategory& source,
                                    const MaterializedCategory& target) {
  const SimplicialSet& x = *f.source;
  const SimplicialSet& y = *f.target;
  FunctorMap out;
  out.objects = f.image[0];
  std::vector<std::vector<int>> letter_image;
  if (x.bound() >= 1)
    for (int e : x.nondegenerate(1)) letter_image.push_back(edge_word(y, f.image[1][e]));
  for (int m = 0; m < source.category.morphism_count(); ++m) {
    std::vector<int> w;
    for (int letter : source.words[m]) {
      const auto& img = letter_image.at(letter >= 0 ? letter : -letter - 1);
      for (int l : img) w.push_back(letter >= 0 ? l : -l - 1);
    }
    out.morphisms.push_back(target.evaluate(f.image[0][source.category.source(m)], w));
  }
  return out;
}

CatCocone colimit_cat(const CatDiagram& d, int bound) {
  std::vector<int> obj_off, mor_off;
  int objects = 0, morphisms = 0;
  for (const auto& c : d.objects) {
    obj_off.push_back(objects);
    mor_off.push_back(morphisms);
    objects += c->object_count();
    morphisms += c->morphism_count();
  }
  UnionFind classes(objects);
  for (const auto& a : d.arrows) {
    if (audit_functor(*d.objects[a.from], *d.objects[a.to], a.map, 1).size())
      throw InputError("diagram arrow is not a functor");
    for (int x = 0; x < d.objects[a.from]->object_count(); ++x)
      classes.unite(obj_off[a.from] + x, obj_off[a.to] + a.map.objects[x]);
  }
  int class_count = 0;
  const std::vector<int> label = classes.classes(&class_count);
  Presentation p;
  p.objects = class_count;
  std::vector<int> gen(morphisms, -1);  // global morphism -> generator (-1: identity)
  for (std::size_t k = 0; k < d.objects.size(); ++k) {
    const Category& c = *d.objects[k];
    for (int f = 0; f < c.morphism_count(); ++f)
      if (!c.is_identity(f))
        gen[mor_off[k] + f] =
            p.add_generator(label[obj_off[k] + c.source(f)], label[obj_off[k] + c.target(f)]);
  }
  auto word = [&](int k, int f) {
    const int g = gen[mor_off[k] + f];
    return g < 0 ? std::vector<int>{} : std::vector<int>{g};
  };
  for (std::size_t k = 0; k < d.objects.size(); ++k) {
    const Category& c = *d.objects[k];
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) continue;
      for (int g : c.out(c.target(f))) {
        if (c.is_identity(g)) continue;
        p.relate(label[obj_off[k] + c.source(f)], {gen[mor_off[k] + f], gen[mor_off[k] + g]},
                 word(static_cast<int>(k), c.compose(g, f)));
      }
    }
  }
  for (const auto& a : d.arrows) {
    const Category& c = *d.objects[a.from];
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) continue;
      p.relate(label[obj_off[a.from] + c.source(f)], word(a.from, f), word(a.to, a.map.morphisms[f]));
    }
  }
  MaterializedCategory m = materialize_category(p, bound);
  CatCocone out;
  std::vector<std::pair<int, int>> origin(p.generator_count());
  for (std::size_t k = 0; k < d.objects.size(); ++k)
    for (int f = 0; f < d.objects[k]->morphism_count(); ++f)
      if (gen[mor_off[k] + f] >= 0) origin[gen[mor_off[k] + f]] = {static_cast<int>(k), f};
  out.object_origin.assign(class_count, {-1, -1});
  for (std::size_t k = 0; k < d.objects.size(); ++k)
    for (int x = 0; x < d.objects[k]->object_count(); ++x)
      if (out.object_origin[label[obj_off[k] + x]].first < 0)
        out.object_origin[label[obj_off[k] + x]] = {static_cast<int>(k), x};
  for (const auto& w : m.words) {
    std::vector<std::pair<int, int>> word;
    for (int g : w) word.push_back(origin[g]);
    out.words.push_back(std::move(word));
  }
  for (std::size_t k = 0; k < d.objects.size(); ++k) {
    const Category& c = *d.objects[k];
    FunctorMap leg;
    for (int x = 0; x < c.object_count(); ++x) leg.objects.push_back(label[obj_off[k] + x]);
    for (int f = 0; f < c.morphism_count(); ++f) {
      const int g = gen[mor_off[k] + f];
      leg.morphisms.push_back(g < 0 ? m.category.identity(leg.objects[c.source(f)]) : m.generator_morphism[g]);
    }
    out.legs.push_back(std::move(leg));
  }
  out.apex = std::move(m.category);
  return out;
}

FunctorMap cocone_factor(const CatCocone& c, const Category& target,
                         const std::function<int(int k, int x)>& object,
                         const std::function<int(int k, int f)>& morphism) {
  FunctorMap out;
  for (auto [k, x] : c.object_origin) out.objects.push_back(object(k, x));
  for (int m = 0; m < c.apex.morphism_count(); ++m) {
    int h = target.identity(out.objects[c.apex.source(m)]);
    for (auto [k, f] : c.words[m]) {
      const int step = morphism(k, f);
      if (target.source(step) != target.target(h)) throw InputError("cocone family is not compatible");
      h = target.compose(step, h);
    }
    out.morphisms.push_back(h);
  }
  return out;
}

CatCocone pushout_cat(CategoryPtr a, CategoryPtr b, CategoryPtr c, const FunctorMap& f,
                      const FunctorMap& g, int bound) {
  CatDiagram d;
  d.objects = {std::move(a), std::move(b), std::move(c)};
  d.arrows = {{0, 1, f}, {0, 2, g}};
  CatCocone out = colimit_cat(d, bound);
  out.legs.erase(out.legs.begin());
  return out;
}

}  // namespace simpcat
