#include "simpcat/homotopy/homology.hpp"

#include <sstream>

namespace simpcat {

std::string AbelianGroupDescriptor::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Integer& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianGroupDescriptor cokernel(int generators, const std::vector<Integer>& invariants) {
  AbelianGroupDescriptor g;
  g.free_rank = generators - static_cast<int>(invariants.size());
  for (const Integer& d : invariants)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

bool ChainComplex::is_complex() const {
  for (int n = 2; n <= top(); ++n) {
    const SparseMatrix& a = boundary[n - 1];
    const SparseMatrix& b = boundary[n];
    for (int c = 0; c < b.cols; ++c) {
      std::vector<long long> acc(a.rows, 0);
      for (const auto& [mid, v] : b.columns[c])
        for (const auto& [r, w] : a.columns[mid]) acc[r] += static_cast<long long>(v) * w;
      for (long long v : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

std::vector<AbelianGroupDescriptor> ChainComplex::homology(int max_degree) const {
  if (max_degree >= top()) throw InputError("homology requested beyond the certified range");
  std::vector<std::vector<Integer>> inv(max_degree + 2);
  for (int n = 1; n <= max_degree + 1; ++n) inv[n] = smith_invariants(boundary[n]);
  std::vector<AbelianGroupDescriptor> out;
  for (int i = 0; i <= max_degree; ++i) {
    AbelianGroupDescriptor g;
    const int rank_out = i >= 1 ? static_cast<int>(inv[i].size()) : 0;
    const int rank_in = static_cast<int>(inv[i + 1].size());
    g.free_rank = ranks[i] - rank_out - rank_in;
    for (const Integer& d : inv[i + 1])
      if (d > 1) g.torsion.push_back(d);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> positions(const SimplicialSet& x, int top) {
  std::vector<std::vector<int>> pos(top + 1);
  for (int n = 0; n <= top; ++n) {
    pos[n].assign(x.size(n), -1);
    int k = 0;
    for (int s : x.nondegenerate(n)) pos[n][s] = k++;
  }
  return pos;
}

}  // namespace

ChainComplex normalized_chains(const SimplicialSet& x) {
  const int top = x.bound();
  auto pos = positions(x, top);
  ChainComplex c;
  c.boundary.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    c.ranks.push_back(static_cast<int>(x.nondegenerate(n).size()));
    if (n == 0) continue;
    SparseMatrix m(static_cast<int>(x.nondegenerate(n - 1).size()), c.ranks[n]);
    for (int s : x.nondegenerate(n))
      for (int i = 0; i <= n; ++i) {
        const int r = pos[n - 1][x.face(n, i, s)];
        if (r >= 0) m.add(r, pos[n][s], i % 2 == 0 ? 1 : -1);
      }
    c.boundary[n] = std::move(m);
  }
  return c;
}

SparseMatrix chain_map(const SimplicialMap& f, int n) {
  const SimplicialSet& x = *f.source;
  const SimplicialSet& y = *f.target;
  SparseMatrix m(static_cast<int>(y.nondegenerate(n).size()), static_cast<int>(x.nondegenerate(n).size()));
  std::vector<int> ypos(y.size(n), -1);
  int k = 0;
  for (int s : y.nondegenerate(n)) ypos[s] = k++;
  k = 0;
  for (int s : x.nondegenerate(n)) {
    const int r = ypos[f.image[n][s]];
    if (r >= 0) m.add(r, k, 1);
    ++k;
  }
  return m;
}

ChainComplex mapping_cone(const SimplicialMap& f, int top) {
  if (top > f.source->bound() + 1 || top > f.target->bound())
    throw InputError("mapping cone beyond the truncation");
  ChainComplex cx = normalized_chains(*f.source);
  ChainComplex cy = normalized_chains(*f.target);
  auto xr = [&](int n) { return n >= 0 ? cx.ranks[n] : 0; };
  ChainComplex c;
  c.boundary.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    c.ranks.push_back(xr(n - 1) + cy.ranks[n]);
    if (n == 0) continue;
    SparseMatrix m(xr(n - 2) + cy.ranks[n - 1], c.ranks[n]);
    const int shift = xr(n - 2);
    if (n >= 2)
      for (int col = 0; col < cx.ranks[n - 1]; ++col)
        for (const auto& [r, v] : cx.boundary[n - 1].columns[col]) m.add(r, col, -v);
    SparseMatrix fm = chain_map(f, n - 1);
    for (int col = 0; col < fm.cols; ++col)
      for (const auto& [r, v] : fm.columns[col]) m.add(shift + r, col, v);
    for (int col = 0; col < cy.ranks[n]; ++col)
      for (const auto& [r, v] : cy.boundary[n].columns[col]) m.add(shift + r, xr(n - 1) + col, v);
    c.boundary[n] = std::move(m);
  }
  return c;
}

AbelianGroupDescriptor homology(const SimplicialSet& x, int i) {
  return homology_up_to(x, i).at(i);
}

std::vector<AbelianGroupDescriptor> homology_up_to(const SimplicialSet& x, int max_degree) {
  if (max_degree < 0 || max_degree > x.bound() - 1)
    throw InputError("homology is certified only for degrees up to bound - 1");
  return normalized_chains(x).homology(max_degree);
}

std::vector<AbelianGroupDescriptor> reduced_homology_up_to(const SimplicialSet& x, int max_degree) {
  auto h = homology_up_to(x, max_degree);
  if (x.size(0) > 0) h[0].free_rank -= 1;
  return h;
}

}  // namespace simpcat
