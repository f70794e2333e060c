#include "simpcat/homotopy/fundamental.hpp"

#include <deque>
#include <sstream>

#include "simpcat/union_find.hpp"

namespace simpcat {

Components pi0(const SimplicialSet& x) {
  UnionFind uf(x.size(0));
  if (x.bound() >= 1)
    for (int e = 0; e < x.size(1); ++e) uf.unite(x.face(1, 0, e), x.face(1, 1, e));
  Components c;
  c.label = uf.classes(&c.count);
  return c;
}

SimplicialSet component(const SimplicialSet& x, int v) {
  const Components comps = pi0(x);
  const int want = comps.label.at(v);
  const int bound = x.bound();
  std::vector<std::vector<int>> keep(bound + 1), index(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    index[n].assign(x.size(n), -1);
    for (int s = 0; s < x.size(n); ++s) {
      const int v0 = x.act(n, s, ordinal::Map{0});
      if (comps.label[v0] == want) {
        index[n][s] = static_cast<int>(keep[n].size());
        keep[n].push_back(s);
      }
    }
  }
  std::vector<int> sizes(bound + 1);
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    sizes[n] = static_cast<int>(keep[n].size());
    if (n > 0) {
      faces[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (int k = 0; k < sizes[n]; ++k) faces[n][i][k] = index[n - 1][x.face(n, i, keep[n][k])];
    }
    if (n < bound) {
      degens[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k < sizes[n]; ++k) degens[n][j][k] = index[n + 1][x.degeneracy(n, j, keep[n][k])];
    }
  }
  return SimplicialSet::from_tables(bound, sizes, std::move(faces), std::move(degens), index[0][v]);
}

std::string PresentedGroup::to_string() const {
  std::ostringstream os;
  auto name = [&](int g) { return g < static_cast<int>(names.size()) ? names[g] : "g" + std::to_string(g); };
  os << "<";
  for (int g = 0; g < generators; ++g) os << (g ? ", " : "") << name(g);
  os << " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    os << (r ? ", " : " ");
    for (std::size_t k = 0; k < relators[r].size(); ++k) {
      const int l = relators[r][k];
      os << (k ? " " : "") << name(std::abs(l) - 1) << (l < 0 ? "^-1" : "");
    }
  }
  os << ">";
  return os.str();
}

PresentedGroup edge_path_group(const SimplicialSet& x, int v) {
  if (x.bound() < 2) throw InputError("edge_path_group needs bound >= 2");
  if (v < 0 || v >= x.size(0)) throw InputError("edge_path_group: no such vertex");
  // BFS tree over nondegenerate edges.
  std::vector<std::vector<int>> incident(x.size(0));
  for (int e : x.nondegenerate(1)) {
    incident[x.face(1, 1, e)].push_back(e);
    incident[x.face(1, 0, e)].push_back(e);
  }
  std::vector<bool> seen(x.size(0), false), tree(x.size(1), false), in_component(x.size(1), false);
  std::deque<int> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int e : incident[u]) {
      in_component[e] = true;
      const int w = x.face(1, 1, e) == u ? x.face(1, 0, e) : x.face(1, 1, e);
      if (!seen[w]) {
        seen[w] = true;
        tree[e] = true;
        queue.push_back(w);
      }
    }
  }
  PresentedGroup g;
  std::vector<int> letter(x.size(1), 0);
  for (int e : x.nondegenerate(1)) {
    if (!in_component[e] || tree[e]) continue;
    letter[e] = ++g.generators;
    g.names.push_back("e" + std::to_string(e));
  }
  for (int t : x.nondegenerate(2)) {
    if (!seen[x.act(2, t, ordinal::Map{0})]) continue;
    std::vector<int> word;
    if (int l = letter[x.face(2, 2, t)]) word.push_back(l);
    if (int l = letter[x.face(2, 0, t)]) word.push_back(l);
    if (int l = letter[x.face(2, 1, t)]) word.push_back(-l);
    if (!word.empty()) g.relators.push_back(std::move(word));
  }
  return g;
}

AbelianGroupDescriptor abelianization(const PresentedGroup& g) {
  DenseMatrix m(g.relators.size(), std::vector<Integer>(g.generators));
  for (std::size_t r = 0; r < g.relators.size(); ++r)
    for (int l : g.relators[r]) m[r][std::abs(l) - 1] += l > 0 ? 1 : -1;
  return cokernel(g.generators, smith_invariants(m));
}

}  // namespace simpcat
