#include "simpcat/sset/operations.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "simpcat/sset/standard.hpp"
#include "simpcat/union_find.hpp"

namespace simpcat {

// ---------------------------------------------------------------------------
// colimits

SSetCocone colimit_sset(const SSetDiagram& diagram, std::optional<std::pair<int, int>> basepoint) {
  if (diagram.objects.empty()) throw InputError("colimit of an empty diagram");
  const int bound = diagram.objects.front()->bound();
  for (const auto& o : diagram.objects)
    if (o->bound() != bound) throw InputError("colimit: mismatched bounds");
  const int count = static_cast<int>(diagram.objects.size());
  for (const auto& a : diagram.arrows) {
    if (a.from < 0 || a.from >= count || a.to < 0 || a.to >= count)
      throw InputError("colimit: arrow endpoint out of range");
    if (static_cast<int>(a.map.image.size()) != bound + 1)
      throw InputError("colimit: arrow has the wrong bound");
  }
  std::vector<std::vector<int>> offset(count, std::vector<int>(bound + 1));
  std::vector<int> total(bound + 1, 0);
  for (int n = 0; n <= bound; ++n)
    for (int o = 0; o < count; ++o) {
      offset[o][n] = total[n];
      total[n] += diagram.objects[o]->size(n);
    }
  std::vector<std::vector<int>> label(bound + 1);
  std::vector<std::vector<int>> rep(bound + 1);  // class -> least coproduct index
  std::vector<int> sizes(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    UnionFind uf(total[n]);
    for (const auto& a : diagram.arrows)
      for (int x = 0; x < diagram.objects[a.from]->size(n); ++x)
        uf.unite(offset[a.from][n] + x, offset[a.to][n] + a.map.image[n][x]);
    label[n] = uf.classes(&sizes[n]);
    rep[n].assign(sizes[n], -1);
    for (int i = total[n] - 1; i >= 0; --i) rep[n][label[n][i]] = i;
  }
  auto locate = [&](int n, int index) {
    int o = 0;
    while (o + 1 < count && offset[o + 1][n] <= index) ++o;
    return std::pair<int, int>{o, index - offset[o][n]};
  };
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    if (n > 0) faces[n].assign(n + 1, std::vector<int>(sizes[n]));
    if (n < bound) degens[n].assign(n + 1, std::vector<int>(sizes[n]));
    for (int c = 0; c < sizes[n]; ++c) {
      auto [o, x] = locate(n, rep[n][c]);
      const SimplicialSet& obj = *diagram.objects[o];
      for (int i = 0; n > 0 && i <= n; ++i)
        faces[n][i][c] = label[n - 1][offset[o][n - 1] + obj.face(n, i, x)];
      for (int j = 0; n < bound && j <= n; ++j)
        degens[n][j][c] = label[n + 1][offset[o][n + 1] + obj.degeneracy(n, j, x)];
    }
  }
  std::optional<int> bp;
  if (basepoint) {
    auto [o, v] = *basepoint;
    if (o < 0 || o >= count || v < 0 || v >= diagram.objects[o]->size(0))
      throw InputError("colimit: basepoint out of range");
    bp = label[0][offset[o][0] + v];
  }
  SSetCocone out;
  out.apex = share(SimplicialSet::from_tables(bound, sizes, std::move(faces), std::move(degens), bp));
  for (int o = 0; o < count; ++o) {
    SimplicialMap leg{diagram.objects[o], out.apex, {}};
    leg.image.resize(bound + 1);
    for (int n = 0; n <= bound; ++n) {
      leg.image[n].resize(diagram.objects[o]->size(n));
      for (int x = 0; x < diagram.objects[o]->size(n); ++x)
        leg.image[n][x] = label[n][offset[o][n] + x];
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

SSetCocone pushout_sset(const SimplicialMap& f, const SimplicialMap& g,
                        std::optional<std::pair<int, int>> basepoint) {
  SSetDiagram d;
  d.objects = {f.source, f.target, g.target};
  d.arrows.push_back({0, 1, f});
  d.arrows.push_back({0, 2, g});
  if (basepoint) basepoint->first += 1;
  SSetCocone c = colimit_sset(d, basepoint);
  c.legs.erase(c.legs.begin());
  return c;
}

SSetCocone coproduct_sset(const std::vector<SSetPtr>& objects) {
  SSetDiagram d;
  d.objects = objects;
  return colimit_sset(d);
}

// ---------------------------------------------------------------------------
// products

SimplicialSet product_sset(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.bound() != y.bound()) throw InputError("product: mismatched bounds");
  const int bound = x.bound();
  std::vector<int> sizes(bound + 1);
  for (int n = 0; n <= bound; ++n) sizes[n] = x.size(n) * y.size(n);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    const int ys = y.size(n);
    if (n > 0) {
      faces[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (int a = 0; a < x.size(n); ++a)
          for (int b = 0; b < ys; ++b)
            faces[n][i][a * ys + b] = x.face(n, i, a) * y.size(n - 1) + y.face(n, i, b);
    }
    if (n < bound) {
      degens[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int j = 0; j <= n; ++j)
        for (int a = 0; a < x.size(n); ++a)
          for (int b = 0; b < ys; ++b)
            degens[n][j][a * ys + b] = x.degeneracy(n, j, a) * y.size(n + 1) + y.degeneracy(n, j, b);
    }
  }
  std::optional<int> bp;
  if (x.basepoint() && y.basepoint()) bp = *x.basepoint() * y.size(0) + *y.basepoint();
  return SimplicialSet::from_tables(bound, sizes, std::move(faces), std::move(degens), bp);
}

SimplicialMap product_projection(SSetPtr product, SSetPtr x, SSetPtr y, int which) {
  SimplicialMap f{product, which == 0 ? x : y, {}};
  f.image.resize(product->bound() + 1);
  for (int n = 0; n <= product->bound(); ++n) {
    const int ys = y->size(n);
    f.image[n].resize(product->size(n));
    for (int s = 0; s < product->size(n); ++s) f.image[n][s] = which == 0 ? s / ys : s % ys;
  }
  return f;
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, SSetPtr source,
                          SSetPtr target) {
  SimplicialMap h{source, target, {}};
  h.image.resize(source->bound() + 1);
  for (int n = 0; n <= source->bound(); ++n) {
    const int ys = g.source->size(n);
    const int ts = g.target->size(n);
    h.image[n].resize(source->size(n));
    for (int s = 0; s < source->size(n); ++s)
      h.image[n][s] = f.image[n][s / ys] * ts + g.image[n][s % ys];
  }
  return h;
}

// ---------------------------------------------------------------------------
// box product, diag, Dec

BisimplicialSet box_product(const SimplicialSet& x, const SimplicialSet& y) {
  const BidegreeShape shape = BidegreeShape::rectangle(x.bound(), y.bound());
  std::vector<std::vector<BisimplicialSet::Cell>> cells(x.bound() + 1,
                                                        std::vector<BisimplicialSet::Cell>(y.bound() + 1));
  for (int p = 0; p <= x.bound(); ++p) {
    for (int q = 0; q <= y.bound(); ++q) {
      auto& c = cells[p][q];
      const int ys = y.size(q);
      c.size = x.size(p) * ys;
      auto fill = [&](std::vector<std::vector<int>>& table, int arity, auto op) {
        table.assign(arity, std::vector<int>(c.size));
        for (int i = 0; i < arity; ++i)
          for (int a = 0; a < x.size(p); ++a)
            for (int b = 0; b < ys; ++b) table[i][a * ys + b] = op(i, a, b);
      };
      if (p >= 1)
        fill(c.dh, p + 1, [&](int i, int a, int b) { return x.face(p, i, a) * ys + b; });
      if (p < x.bound())
        fill(c.sh, p + 1, [&](int i, int a, int b) { return x.degeneracy(p, i, a) * ys + b; });
      if (q >= 1)
        fill(c.dv, q + 1, [&](int i, int a, int b) { return a * y.size(q - 1) + y.face(q, i, b); });
      if (q < y.bound())
        fill(c.sv, q + 1,
             [&](int i, int a, int b) { return a * y.size(q + 1) + y.degeneracy(q, i, b); });
    }
  }
  std::optional<int> bp;
  if (x.basepoint() && y.basepoint()) bp = *x.basepoint() * y.size(0) + *y.basepoint();
  return BisimplicialSet(shape, std::move(cells), bp);
}

SimplicialSet diag(const BisimplicialSet& b) {
  const int bound = b.shape().diagonal_bound();
  if (bound < 0) throw InputError("diag: empty diagonal support");
  std::vector<int> sizes(bound + 1);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    sizes[n] = b.size(n, n);
    if (n > 0) {
      faces[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < sizes[n]; ++x) faces[n][i][x] = b.dh(n, n - 1, i, b.dv(n, n, i, x));
    }
    if (n < bound) {
      degens[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int j = 0; j <= n; ++j)
        for (int x = 0; x < sizes[n]; ++x) degens[n][j][x] = b.sh(n, n + 1, j, b.sv(n, n, j, x));
    }
  }
  return SimplicialSet::from_tables(bound, sizes, std::move(faces), std::move(degens), b.basepoint());
}

SimplicialMap diag(const BisimplicialMap& f, SSetPtr source, SSetPtr target) {
  SimplicialMap g{source, target, {}};
  g.image.resize(source->bound() + 1);
  for (int n = 0; n <= source->bound(); ++n) g.image[n] = f.image[n][n];
  return g;
}

BisimplicialSet dec(const SimplicialSet& y) {
  const int d = y.bound();
  if (d < 1) throw InputError("dec needs bound >= 1");
  const BidegreeShape shape = BidegreeShape::staircase(d);
  std::vector<std::vector<BisimplicialSet::Cell>> cells(d);
  for (int p = 0; p < d; ++p) {
    cells[p].resize(d - p);
    for (int q = 0; p + q + 1 <= d; ++q) {
      auto& c = cells[p][q];
      const int n = p + q + 1;
      c.size = y.size(n);
      const bool up = n + 1 <= d;
      for (int i = 0; p >= 1 && i <= p; ++i) c.dh.push_back(y.face_table()[n][i]);
      for (int j = 0; up && j <= p; ++j) c.sh.push_back(y.degeneracy_table()[n][j]);
      for (int i = 0; q >= 1 && i <= q; ++i) c.dv.push_back(y.face_table()[n][p + 1 + i]);
      for (int j = 0; up && j <= q; ++j) c.sv.push_back(y.degeneracy_table()[n][p + 1 + j]);
    }
  }
  std::optional<int> bp;
  if (y.basepoint()) bp = y.degeneracy(0, 0, *y.basepoint());
  return BisimplicialSet(shape, std::move(cells), bp);
}

BisimplicialMap dec(const SimplicialMap& f, BisetPtr source, BisetPtr target) {
  BisimplicialMap g{source, target, {}};
  const BidegreeShape& shape = source->shape();
  g.image.resize(shape.max_p(0) + 1);
  for (int p = 0; p <= shape.max_p(0); ++p) {
    g.image[p].resize(shape.max_q_at(p) + 1);
    for (int q = 0; q <= shape.max_q_at(p); ++q) g.image[p][q] = f.image[p + q + 1];
  }
  return g;
}

// ---------------------------------------------------------------------------
// W-bar

namespace {

bool antidiagonal_in_shape(const BidegreeShape& shape, int n) {
  for (int p = 0; p <= n; ++p)
    if (!shape.contains(p, n - p)) return false;
  return true;
}

}  // namespace

SimplicialSet wbar(const BisimplicialSet& b, int max_degree) {
  const BidegreeShape& shape = b.shape();
  int bound = -1;
  while (antidiagonal_in_shape(shape, bound + 1)) ++bound;
  if (bound < 0) throw InputError("wbar: shape holds no anti-diagonal");
  if (max_degree >= 0) {
    if (max_degree > bound) throw InputError("wbar: requested degree exceeds the shape");
    bound = max_degree;
  }
  // by_dv0[p][q][v]: simplices x of B_{p,q} with dv_0 x = v (q >= 1).
  std::vector<std::vector<std::vector<std::vector<int>>>> by_dv0(shape.max_p(0) + 1);
  for (int p = 0; p <= shape.max_p(0); ++p) {
    by_dv0[p].resize(shape.max_q_at(p) + 1);
    for (int q = 1; q <= shape.max_q_at(p); ++q) {
      by_dv0[p][q].resize(b.size(p, q - 1));
      for (int x = 0; x < b.size(p, q); ++x) by_dv0[p][q][b.dv(p, q, 0, x)].push_back(x);
    }
  }
  std::vector<std::vector<std::vector<int>>> tuples(bound + 1);
  std::vector<std::map<std::vector<int>, int>> index(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    std::vector<int> cur(n + 1);
    auto fill = [&](auto& self, int p) -> void {
      if (p < 0) {
        tuples[n].push_back(cur);
        return;
      }
      for (int x : by_dv0[p][n - p][b.dh(p + 1, n - p - 1, p + 1, cur[p + 1])]) {
        cur[p] = x;
        self(self, p - 1);
      }
    };
    for (int x = 0; x < b.size(n, 0); ++x) {
      cur[n] = x;
      fill(fill, n - 1);
    }
    std::sort(tuples[n].begin(), tuples[n].end());
    for (int id = 0; id < static_cast<int>(tuples[n].size()); ++id) index[n].emplace(tuples[n][id], id);
  }
  std::vector<int> sizes(bound + 1);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    sizes[n] = static_cast<int>(tuples[n].size());
    if (n > 0) {
      faces[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int i = 0; i <= n; ++i) {
        for (int id = 0; id < sizes[n]; ++id) {
          const auto& t = tuples[n][id];
          std::vector<int> out;
          out.reserve(n);
          for (int p = 0; p <= n; ++p) {
            if (p < i) out.push_back(b.dv(p, n - p, i - p, t[p]));
            else if (p > i) out.push_back(b.dh(p, n - p, i, t[p]));
          }
          faces[n][i][id] = index[n - 1].at(out);
        }
      }
    }
    if (n < bound) {
      degens[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int i = 0; i <= n; ++i) {
        for (int id = 0; id < sizes[n]; ++id) {
          const auto& t = tuples[n][id];
          std::vector<int> out;
          out.reserve(n + 2);
          for (int p = 0; p <= n; ++p) {
            if (p < i) {
              out.push_back(b.sv(p, n - p, i - p, t[p]));
            } else if (p == i) {
              out.push_back(b.sv(p, n - p, 0, t[p]));
              out.push_back(b.sh(p, n - p, i, t[p]));
            } else {
              out.push_back(b.sh(p, n - p, i, t[p]));
            }
          }
          degens[n][i][id] = index[n + 1].at(out);
        }
      }
    }
  }
  std::optional<int> bp;
  if (b.basepoint()) bp = index[0].at({*b.basepoint()});
  return SimplicialSet::from_tables(bound, sizes, std::move(faces), std::move(degens), bp);
}

std::vector<int> wbar_tuple(const BisimplicialSet& b, const SimplicialSet& w, int n, int id) {
  // Tuples are numbered in lexicographic order; rebuild the order for degree n.
  if (n < 0 || n > w.bound() || id < 0 || id >= w.size(n)) throw InputError("wbar_tuple: no such simplex");
  std::vector<std::vector<int>> all;
  std::vector<int> cur(n + 1);
  auto fill = [&](auto& self, int p) -> void {
    if (p < 0) {
      all.push_back(cur);
      return;
    }
    for (int x = 0; x < b.size(p, n - p); ++x) {
      if (b.dv(p, n - p, 0, x) != b.dh(p + 1, n - p - 1, p + 1, cur[p + 1])) continue;
      cur[p] = x;
      self(self, p - 1);
    }
  };
  for (int x = 0; x < b.size(n, 0); ++x) {
    cur[n] = x;
    fill(fill, n - 1);
  }
  std::sort(all.begin(), all.end());
  return all.at(id);
}

// ---------------------------------------------------------------------------
// d_star

namespace {

using DKey = std::tuple<int, int, ordinal::Map, ordinal::Map>;

class DStarBuilder {
 public:
  explicit DStarBuilder(const SimplicialSet& x) : x_(x), d_(x.bound()) {
    if (d_ < 1) throw InputError("d_star needs bound >= 1");
    shape_ = BidegreeShape::staircase(d_);
    universe_.resize(d_);
    classes_.resize(d_);
    reps_.resize(d_);
    for (int p = 0; p < d_; ++p) {
      universe_[p].resize(d_ - p);
      classes_[p].resize(d_ - p);
      reps_[p].resize(d_ - p);
      for (int q = 0; p + q + 1 <= d_; ++q) build_cell(p, q);
    }
  }

  // Normal form of (y, α, β) for y any simplex of degree m.
  DKey normalize(int m, int y, const ordinal::Map& alpha, const ordinal::Map& beta) const {
    std::vector<bool> hit(m + 1, false);
    for (int v : alpha) hit[v] = true;
    for (int v : beta) hit[v] = true;
    ordinal::Map mono, shift(m + 1, -1);
    for (int v = 0; v <= m; ++v)
      if (hit[v]) {
        shift[v] = static_cast<int>(mono.size());
        mono.push_back(v);
      }
    const int k = static_cast<int>(mono.size()) - 1;
    int z = y;
    ordinal::Map a(alpha.size()), b(beta.size());
    for (std::size_t t = 0; t < alpha.size(); ++t) a[t] = shift[alpha[t]];
    for (std::size_t t = 0; t < beta.size(); ++t) b[t] = shift[beta[t]];
    if (k < m) z = x_.act(m, y, mono);
    const EzForm& ez = x_.ez(k, z);
    if (!ez.degeneracy_word.empty()) {
      auto collapse = [&](ordinal::Map& t) {
        for (int& v : t)
          for (int i : ez.degeneracy_word) v = v <= i ? v : v - 1;
      };
      collapse(a);
      collapse(b);
    }
    return {k - static_cast<int>(ez.degeneracy_word.size()), ez.base, std::move(a), std::move(b)};
  }

  int locate(int p, int q, int m, int y, const ordinal::Map& alpha, const ordinal::Map& beta) const {
    return classes_[p][q].at(universe_[p][q].at(normalize(m, y, alpha, beta)));
  }

  BisimplicialSet result() const {
    std::vector<std::vector<BisimplicialSet::Cell>> cells(d_);
    for (int p = 0; p < d_; ++p) {
      cells[p].resize(d_ - p);
      for (int q = 0; p + q + 1 <= d_; ++q) {
        auto& c = cells[p][q];
        const auto& reps = reps_[p][q];
        c.size = static_cast<int>(reps.size());
        const bool hs = shape_.contains(p + 1, q);
        const bool vs = shape_.contains(p, q + 1);
        if (p >= 1) c.dh.assign(p + 1, std::vector<int>(c.size));
        if (hs) c.sh.assign(p + 1, std::vector<int>(c.size));
        if (q >= 1) c.dv.assign(q + 1, std::vector<int>(c.size));
        if (vs) c.sv.assign(q + 1, std::vector<int>(c.size));
        for (int id = 0; id < c.size; ++id) {
          const auto& [n, x, a, b] = reps[id];
          for (int i = 0; p >= 1 && i <= p; ++i) c.dh[i][id] = locate(p - 1, q, n, x, drop(a, i), b);
          for (int j = 0; hs && j <= p; ++j) c.sh[j][id] = locate(p + 1, q, n, x, repeat(a, j), b);
          for (int i = 0; q >= 1 && i <= q; ++i) c.dv[i][id] = locate(p, q - 1, n, x, a, drop(b, i));
          for (int j = 0; vs && j <= q; ++j) c.sv[j][id] = locate(p, q + 1, n, x, a, repeat(b, j));
        }
      }
    }
    std::optional<int> bp;
    if (x_.basepoint()) bp = locate(0, 0, 0, *x_.basepoint(), {0}, {0});
    return BisimplicialSet(shape_, std::move(cells), bp);
  }

  const std::vector<DKey>& reps(int p, int q) const { return reps_[p][q]; }
  int bound() const { return d_; }

 private:
  static ordinal::Map drop(ordinal::Map t, int i) {
    t.erase(t.begin() + i);
    return t;
  }
  static ordinal::Map repeat(ordinal::Map t, int j) {
    t.insert(t.begin() + j, t[j]);
    return t;
  }

  void build_cell(int p, int q) {
    std::vector<DKey> keys;
    for (int n = 0; n <= std::min(d_, p + q + 1); ++n)
      for (int x : x_.nondegenerate(n))
        for (const auto& a : ordinal::all_maps(p, n))
          for (const auto& b : ordinal::all_maps(q, n)) keys.emplace_back(n, x, a, b);
    auto& index = universe_[p][q];
    for (int k = 0; k < static_cast<int>(keys.size()); ++k) index.emplace(keys[k], k);
    UnionFind uf(keys.size());
    for (int k = 0; k < static_cast<int>(keys.size()); ++k) {
      const auto& [n, x, a, b] = keys[k];
      for (int i = 0; n >= 1 && i <= n; ++i) {
        if (std::find(a.begin(), a.end(), i) != a.end()) continue;
        if (std::find(b.begin(), b.end(), i) != b.end()) continue;
        ordinal::Map a2 = a, b2 = b;
        for (int& v : a2) v = v < i ? v : v - 1;
        for (int& v : b2) v = v < i ? v : v - 1;
        uf.unite(k, index.at(normalize(n - 1, x_.face(n, i, x), a2, b2)));
      }
    }
    int count = 0;
    std::vector<int> label = uf.classes(&count);
    auto& reps = reps_[p][q];
    reps.resize(count);
    std::vector<bool> seen(count, false);
    for (int k = 0; k < static_cast<int>(keys.size()); ++k)
      if (!seen[label[k]]) {
        seen[label[k]] = true;
        reps[label[k]] = keys[k];
      }
    classes_[p][q].assign(keys.size(), 0);
    for (int k = 0; k < static_cast<int>(keys.size()); ++k) classes_[p][q][k] = label[k];
  }

  const SimplicialSet& x_;
  int d_;
  BidegreeShape shape_;
  std::vector<std::vector<std::map<DKey, int>>> universe_;
  std::vector<std::vector<std::vector<int>>> classes_;
  std::vector<std::vector<std::vector<DKey>>> reps_;
};

}  // namespace

BisimplicialSet d_star(const SimplicialSet& x) { return DStarBuilder(x).result(); }

BisimplicialMap d_star(const SimplicialMap& f, BisetPtr source, BisetPtr target) {
  DStarBuilder from(*f.source);
  DStarBuilder to(*f.target);
  if (to.bound() != from.bound()) throw InputError("d_star: map changes the bound");
  BisimplicialMap g{source, target, {}};
  const int d = from.bound();
  g.image.resize(d);
  for (int p = 0; p < d; ++p) {
    g.image[p].resize(d - p);
    for (int q = 0; p + q + 1 <= d; ++q) {
      for (const auto& [n, x, a, b] : from.reps(p, q))
        g.image[p][q].push_back(to.locate(p, q, n, f.image[n][x], a, b));
    }
  }
  return g;
}

std::vector<std::vector<std::vector<DStarRep>>> d_star_representatives(const SimplicialSet& x) {
  DStarBuilder builder(x);
  const int d = builder.bound();
  std::vector<std::vector<std::vector<DStarRep>>> out(d);
  for (int p = 0; p < d; ++p) {
    out[p].resize(d - p);
    for (int q = 0; p + q + 1 <= d; ++q)
      for (const auto& [n, s, a, b] : builder.reps(p, q)) out[p][q].push_back({n, s, a, b});
  }
  return out;
}

// ---------------------------------------------------------------------------
// C^σ

SimplicialSet c_sigma(int n, const ordinal::Map& sigma, int bound) {
  if (sigma.empty() || !ordinal::is_nondecreasing(sigma, n))
    throw InputError("c_sigma: not a simplex of the n-simplex");
  if (ordinal::is_surjective(sigma, n)) throw InputError("c_sigma: simplex not in the boundary");
  std::vector<bool> in_sigma(n + 1, false);
  for (int v : sigma) in_sigma[v] = true;
  return delta_subcomplex(n, bound, [&](const ordinal::Map& theta) {
    std::vector<bool> hit(n + 1, false);
    for (int v : theta) hit[v] = true;
    for (int i = 0; i <= n; ++i)
      if (!in_sigma[i] && !hit[i]) return true;
    return false;
  });
}

}  // namespace simpcat
