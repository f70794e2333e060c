#include "simpcat/spectra/ktheory.hpp"

#include <algorithm>
#include <map>

#include "simpcat/scat/levelwise.hpp"
#include "simpcat/sset/maps.hpp"
#include "simpcat/sset/operations.hpp"
#include "simpcat/sset/standard.hpp"

namespace simpcat {

namespace {

SimplicialSet truncated(const SimplicialSet& x, int bound) {
  if (x.bound() < bound) throw InputError("simplicial set is truncated below degree " + std::to_string(bound));
  std::vector<int> sizes(x.sizes().begin(), x.sizes().begin() + bound + 1);
  FaceTable faces(x.face_table().begin(), x.face_table().begin() + bound + 1);
  FaceTable degens(x.degeneracy_table().begin(), x.degeneracy_table().begin() + bound + 1);
  degens[bound].clear();
  return SimplicialSet::from_tables(bound, std::move(sizes), std::move(faces), std::move(degens), x.basepoint());
}

std::vector<int> basepoints(const SimplicialSet& x) {
  std::vector<int> bp{*x.basepoint()};
  for (int n = 0; n < x.bound(); ++n) bp.push_back(x.degeneracy(n, 0, bp.back()));
  return bp;
}

// The simplicial map Δᵃ -> Δᵇ induced by a monotone vertex map.
SimplicialMap simplex_operator(SSetPtr from, SSetPtr to, const std::function<int(int)>& phi) {
  std::map<std::vector<int>, int> index;
  for (int m = 0; m <= to->bound(); ++m)
    for (int s = 0; s < to->size(m); ++s) index.emplace(to->vertices(m, s), s);
  SimplicialMap f{from, to, {}};
  for (int m = 0; m <= from->bound(); ++m) {
    f.image.emplace_back();
    for (int s = 0; s < from->size(m); ++s) {
      auto v = from->vertices(m, s);
      for (int& k : v) k = phi(k);
      f.image.back().push_back(index.at(v));
    }
  }
  return f;
}

}  // namespace

MappingSpace mapping_space(const SimplicialSet& x, const SimplicialCategory& c, int n_max, std::uint64_t cap) {
  if (!x.basepoint() || !c.pointed()) throw InputError("mapping_space: both arguments must be pointed");
  if (n_max < 0) throw InputError("mapping_space: negative degree");
  const int top = std::max(x.dimension(), 0) + n_max;
  if (c.bound() < top)
    throw InputError("mapping_space: target certified to degree " + std::to_string(c.bound()) + ", need " +
                     std::to_string(top));
  auto xb = share(truncated(x, top));
  MappingSpace out;
  out.domain = xb;
  out.target = share(diag_nerve_iso(c, top));
  const std::vector<int> x_bp = basepoints(*xb);
  const std::vector<int> d_bp = basepoints(*out.target);

  std::vector<SSetPtr> grids, products;
  std::vector<std::map<std::vector<std::vector<int>>, int>> index(n_max + 1);
  out.maps.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    grids.push_back(share(delta(n, top)));
    products.push_back(share(product_sset(*xb, *grids[n])));
    const SimplicialSet& p = *products[n];
    MapSearchOptions opt;
    opt.cap = cap;
    opt.forced.resize(top + 1);
    for (int m = 0; m <= top; ++m) {
      opt.forced[m].assign(p.size(m), -1);
      for (int z = 0; z < p.size(m); ++z)
        if (z / grids[n]->size(m) == x_bp[m]) opt.forced[m][z] = d_bp[m];
    }
    for_each_map(p, *out.target, opt, [&](const std::vector<std::vector<int>>& image) {
      index[n].emplace(image, static_cast<int>(out.maps[n].size()));
      out.maps[n].push_back(image);
    });
  }

  // Precomposition with id x φ for φ: Δᵃ -> Δᵇ, as a function level b -> level a.
  auto precompose = [&](int a, int b, const std::function<int(int)>& phi) {
    const SimplicialMap op = simplex_operator(grids[a], grids[b], phi);
    const SimplicialMap pm = product_map(SimplicialMap::identity(xb), op, products[a], products[b]);
    std::vector<int> table;
    for (const auto& image : out.maps[b]) {
      std::vector<std::vector<int>> pulled(top + 1);
      for (int m = 0; m <= top; ++m)
        for (int z = 0; z < products[a]->size(m); ++z) pulled[m].push_back(image[m][pm(m, z)]);
      table.push_back(index[a].at(pulled));
    }
    return table;
  };
  std::vector<int> sizes;
  FaceTable faces(n_max + 1), degens(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    sizes.push_back(static_cast<int>(out.maps[n].size()));
    for (int i = 0; n >= 1 && i <= n; ++i) faces[n].push_back(precompose(n - 1, n, [i](int v) { return v < i ? v : v + 1; }));
    for (int j = 0; n < n_max && j <= n; ++j)
      degens[n].push_back(precompose(n + 1, n, [j](int v) { return v <= j ? v : v - 1; }));
  }
  // The constant map at the basepoint.
  std::vector<std::vector<int>> constant(top + 1);
  for (int m = 0; m <= top; ++m) constant[m].assign(products[0]->size(m), d_bp[m]);
  out.space = SimplicialSet::from_tables(n_max, std::move(sizes), std::move(faces), std::move(degens),
                                         index[0].at(constant));
  return out;
}

SimplicialMap evaluate_s0(const MappingSpace& m) {
  const SimplicialSet& x = *m.domain;
  if (x.size(0) != 2 || x.dimension() != 0 || x.basepoint() != 0)
    throw InputError("evaluate_s0: the mapping space is not out of S0");
  SimplicialMap f{share(m.space), m.target, {}};
  for (int n = 0; n <= m.space.bound(); ++n) {
    const SimplicialSet grid = delta(n, m.target->bound());
    int x1 = 1;
    for (int k = 0; k < n; ++k) x1 = x.degeneracy(k, 0, x1);
    int top = 0;
    while (grid.vertices(n, top) != ordinal::identity(n)) ++top;
    const int width = grid.size(n);
    f.image.emplace_back();
    for (const auto& image : m.maps[n]) f.image.back().push_back(image[n][x1 * width + top]);
  }
  return f;
}

KReport k_groups(const SimplicialCategory& c, int k) {
  if (!c.pointed()) throw InputError("k_groups: the simplicial category must be pointed");
  const int top = std::min(std::max(k, 1) + 1, c.bound());
  const SimplicialSet d = diag_nerve_iso(c, top);
  KReport r;
  const Components comps = pi0(d);
  const int bp = *d.basepoint();
  r.components = comps.count;
  r.basepoint_class = comps.label[bp];
  r.pi1 = edge_path_group(d, bp);
  r.pi1_abelian = abelianization(r.pi1);
  if (top >= 2) r.h1_basepoint = homology(component(d, bp), 1);
  for (int i = 2; i <= std::min(k, top - 1); ++i) r.higher_homology.push_back(homology(d, i));
  r.caveat = "H_i for i >= 2 is a homology approximation of the diagonal nerve, not K_i";
  if (top < 2) r.caveat += "; degree-1 data uncertified below bound 2";
  return r;
}

}  // namespace simpcat
