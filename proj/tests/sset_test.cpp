#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "simpcat/sset/maps.hpp"
#include "simpcat/sset/operations.hpp"
#include "simpcat/sset/standard.hpp"
#include "simpcat/union_find.hpp"

using namespace simpcat;

namespace {

std::vector<int> sizes_of(const SimplicialSet& x) { return x.sizes(); }

std::vector<int> nondegenerate_counts(const SimplicialSet& x) {
  std::vector<int> out;
  for (int n = 0; n <= x.bound(); ++n) out.push_back(static_cast<int>(x.nondegenerate(n).size()));
  return out;
}

void expect_valid(const SimplicialSet& x) {
  auto v = x.audit();
  EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v.front().describe());
}

void expect_valid(const BisimplicialSet& b) {
  auto v = b.audit();
  EXPECT_TRUE(v.empty()) << (v.empty() ? "" : v.front());
}

// Tables equal up to renumbering by the given bijections.
bool isomorphic_via(const SimplicialSet& a, const SimplicialSet& b,
                    const std::vector<std::vector<int>>& phi) {
  if (a.bound() != b.bound()) return false;
  for (int n = 0; n <= a.bound(); ++n) {
    if (a.size(n) != b.size(n)) return false;
    std::set<int> hit(phi[n].begin(), phi[n].end());
    if (static_cast<int>(hit.size()) != a.size(n)) return false;
    for (int x = 0; x < a.size(n); ++x) {
      for (int i = 0; n > 0 && i <= n; ++i)
        if (phi[n - 1][a.face(n, i, x)] != b.face(n, i, phi[n][x])) return false;
      for (int j = 0; n < a.bound() && j <= n; ++j)
        if (phi[n + 1][a.degeneracy(n, j, x)] != b.degeneracy(n, j, phi[n][x])) return false;
    }
  }
  return true;
}

// Finds an isomorphism by trying all maps a -> b and checking bijectivity.
bool isomorphic(const SimplicialSet& a, const SimplicialSet& b) {
  if (a.sizes() != b.sizes()) return false;
  bool found = false;
  MapSearchOptions opt;
  for_each_map(a, b, opt, [&](const std::vector<std::vector<int>>& image) {
    if (!found && isomorphic_via(a, b, image)) found = true;
  });
  return found;
}

}  // namespace

TEST(Ordinal, FactorAndCounts) {
  auto em = ordinal::factor({0, 0, 2, 2, 3});
  EXPECT_EQ(em.epi, (ordinal::Map{0, 0, 1, 1, 2}));
  EXPECT_EQ(em.mono, (ordinal::Map{0, 2, 3}));
  EXPECT_EQ(ordinal::repeat_positions(em.epi), (std::vector<int>{0, 2}));
  EXPECT_EQ(ordinal::missed_descending(em.mono, 3), (std::vector<int>{1}));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      EXPECT_EQ(static_cast<std::int64_t>(ordinal::all_maps(n, m).size()), ordinal::count_maps(n, m));
}

TEST(Standard, DeltaSizesAreHomCounts) {
  SimplicialSet d1 = delta(1, 2);
  EXPECT_EQ(sizes_of(d1), (std::vector<int>{2, 3, 4}));
  for (int n = 0; n <= 3; ++n) {
    SimplicialSet d = delta(n, 4);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(d.size(k), ordinal::count_maps(k, n));
    expect_valid(d);
  }
}

TEST(Standard, BoundaryNondegenerateCounts) {
  EXPECT_EQ(nondegenerate_counts(boundary(2, 2)), (std::vector<int>{3, 3, 0}));
  EXPECT_EQ(nondegenerate_counts(boundary(3, 3)), (std::vector<int>{4, 6, 4, 0}));
  EXPECT_EQ(nondegenerate_counts(horn(2, 1, 2)), (std::vector<int>{3, 2, 0}));
  EXPECT_EQ(nondegenerate_counts(horn(3, 0, 3)), (std::vector<int>{4, 6, 3, 0}));
  EXPECT_THROW(horn(2, 3, 2), InputError);
}

TEST(Standard, SphereMatchesPushout) {
  SimplicialSet s1 = sphere(1, 3);
  EXPECT_EQ(sizes_of(s1), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(s1.basepoint(), std::optional<int>(0));
  expect_valid(s1);

  // ∗ <- ∂Δ¹ -> Δ¹
  for (int n = 1; n <= 3; ++n) {
    const int bound = n + 2;
    auto bd = share(boundary(n, bound));
    auto dn = share(delta(n, bound));
    auto pt = share(point(bound));
    std::vector<std::vector<ordinal::Map>> bkeys, dkeys;
    delta_subcomplex(
        n, bound, [n](const ordinal::Map& t) { return !ordinal::is_surjective(t, n); }, &bkeys);
    delta_subcomplex(n, bound, [](const ordinal::Map&) { return true; }, &dkeys);
    SimplicialMap incl{bd, dn, {}}, collapse{bd, pt, {}};
    incl.image.resize(bound + 1);
    collapse.image.resize(bound + 1);
    for (int k = 0; k <= bound; ++k) {
      for (const auto& key : bkeys[k]) {
        incl.image[k].push_back(static_cast<int>(
            std::lower_bound(dkeys[k].begin(), dkeys[k].end(), key) - dkeys[k].begin()));
        collapse.image[k].push_back(0);
      }
    }
    EXPECT_TRUE(incl.audit().empty());
    SSetCocone c = pushout_sset(collapse, incl, std::pair{0, 0});
    SimplicialSet s = sphere(n, bound);
    EXPECT_EQ(c.apex->sizes(), s.sizes());
    EXPECT_TRUE(isomorphic(*c.apex, s));
  }
  SSetCocone c2 = [] {
    auto bd = share(boundary(1, 2));
    auto d = share(delta(1, 2));
    auto pt = share(point(2));
    SimplicialMap incl{bd, d, {{0, 1}, {0, 2}, {0, 3}}};
    SimplicialMap coll{bd, pt, {{0, 0}, {0, 0}, {0, 0}}};
    return pushout_sset(coll, incl);
  }();
  EXPECT_EQ(c2.apex->sizes(), (std::vector<int>{1, 2, 3}));
}

TEST(Standard, TwoPointIsCoproductOfPoints) {
  auto p = share(point(3));
  SSetCocone c = coproduct_sset({p, p});
  EXPECT_EQ(*c.apex, two_point(3).with_basepoint(std::nullopt));
}

TEST(SimplicialSet, EilenbergZilberFormsAreCanonical) {
  for (const SimplicialSet& x : {delta(2, 4), boundary(3, 4), sphere(2, 4), horn(2, 0, 4)}) {
    std::set<std::pair<int, std::vector<int>>> seen;
    for (int n = 0; n <= x.bound(); ++n) {
      for (int s = 0; s < x.size(n); ++s) {
        const EzForm& ez = x.ez(n, s);
        const int k = n - static_cast<int>(ez.degeneracy_word.size());
        EXPECT_TRUE(x.is_nondegenerate(k, ez.base));
        EXPECT_TRUE(std::is_sorted(ez.degeneracy_word.rbegin(), ez.degeneracy_word.rend()));
        EXPECT_EQ(std::adjacent_find(ez.degeneracy_word.begin(), ez.degeneracy_word.end()),
                  ez.degeneracy_word.end());
        EXPECT_EQ(x.apply_degeneracies(k, ez.base, ez.degeneracy_word), s);
        EXPECT_TRUE(seen.insert({ez.base * 100 + k, ez.degeneracy_word}).second);
      }
    }
  }
}

TEST(SimplicialSet, ActAgreesWithFacesAndDegeneracies) {
  SimplicialSet x = delta(2, 4);
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s < x.size(n); ++s)
      for (int i = 0; i <= n; ++i) EXPECT_EQ(x.act(n, s, ordinal::coface(n, i)), x.face(n, i, s));
  for (int n = 0; n < 4; ++n)
    for (int s = 0; s < x.size(n); ++s)
      for (int j = 0; j <= n; ++j)
        EXPECT_EQ(x.act(n, s, ordinal::codegeneracy(n, j)), x.degeneracy(n, j, s));
  // Functoriality: x.(θ∘φ) = (x.θ).φ
  for (const auto& theta : ordinal::all_maps(2, 3))
    for (const auto& phi : ordinal::all_maps(3, 2))
      for (int s = 0; s < x.size(3); ++s)
        EXPECT_EQ(x.act(3, s, ordinal::compose(theta, phi)), x.act(2, x.act(3, s, theta), phi));
}

TEST(SimplicialSet, AuditRejectsBrokenFaces) {
  SimplicialSet d = delta(2, 2);
  FaceTable faces = d.face_table();
  std::swap(faces[2][0][7], faces[2][2][7]);
  SimplicialSet bad = SimplicialSet::from_tables(2, d.sizes(), faces, d.degeneracy_table());
  EXPECT_FALSE(bad.audit().empty());
  EXPECT_THROW(SimplicialSet::from_tables(1, {1, 1}, {{}, {{0}}}, {{{0}}}), AuditFailure);
}

TEST(Product, CountsAndShuffles) {
  SimplicialSet d1 = delta(1, 3);
  SimplicialSet p = product_sset(d1, d1);
  expect_valid(p);
  EXPECT_EQ(p.size(1), 9);
  EXPECT_EQ(nondegenerate_counts(p), (std::vector<int>{4, 5, 2, 0}));
  // Shuffle oracle: nondegenerate n-simplices of Δ¹ x Δ¹ are pairs of sequences
  // with no repeated pair of consecutive vertices.
  for (int n = 0; n <= 3; ++n) {
    int count = 0;
    for (const auto& a : ordinal::all_maps(n, 1))
      for (const auto& b : ordinal::all_maps(n, 1)) {
        bool ok = true;
        for (int t = 0; t < n; ++t) ok = ok && !(a[t] == a[t + 1] && b[t] == b[t + 1]);
        count += ok;
      }
    EXPECT_EQ(static_cast<int>(p.nondegenerate(n).size()), count);
  }
  EXPECT_TRUE(isomorphic(product_sset(d1, point(3)), d1));
  EXPECT_THROW(product_sset(d1, point(2)), InputError);
}

TEST(Bisimplicial, BoxAndDiag) {
  SimplicialSet d1 = delta(1, 3);
  BisimplicialSet b = box_product(d1, d1);
  expect_valid(b);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) EXPECT_EQ(b.size(p, q), (p + 2) * (q + 2));
  SimplicialSet dg = diag(b);
  expect_valid(dg);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(dg.size(n), (n + 2) * (n + 2));
  // diag(box(X, X)) is the product X x X, elementwise.
  EXPECT_EQ(dg, product_sset(d1, d1));
  SimplicialSet s1 = sphere(1, 3);
  BisimplicialSet b0 = box_product(point(3), s1);
  for (int p = 0; p <= 3; ++p) EXPECT_EQ(b0.vertical(p), s1.with_basepoint(std::nullopt));
}

TEST(Bisimplicial, DecCounts) {
  BisimplicialSet d = dec(delta(1, 6));
  expect_valid(d);
  for (int q = 0; q < 6; ++q)
    for (int p = 0; p + q + 1 <= 6; ++p) EXPECT_EQ(d.size(p, q), p + q + 3);
  SimplicialSet dg = diag(d);
  EXPECT_EQ(dg.bound(), 2);
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(dg.size(n), 2 * n + 3);
  BisimplicialSet d0 = dec(point(4));
  for (int q = 0; q < 4; ++q)
    for (int p = 0; p + q + 1 <= 4; ++p) EXPECT_EQ(d0.size(p, q), 1);
  expect_valid(dec(boundary(2, 6)));
  EXPECT_THROW(dec(point(0)), InputError);
}

TEST(Bisimplicial, WbarMatchingCondition) {
  SimplicialSet d1 = delta(1, 4);
  BisimplicialSet d = dec(d1);
  SimplicialSet w = wbar(d);
  expect_valid(w);
  // Oracle: pairs (x, y) in Δ¹_2 x Δ¹_2 with d_1 x = d_1 y.
  int pairs = 0;
  for (int x = 0; x < d1.size(2); ++x)
    for (int y = 0; y < d1.size(2); ++y) pairs += d1.face(2, 1, x) == d1.face(2, 1, y);
  EXPECT_EQ(pairs, 6);
  EXPECT_EQ(w.size(1), 6);
  SimplicialSet w0 = wbar(dec(point(5)));
  for (int n = 0; n <= w0.bound(); ++n) EXPECT_EQ(w0.size(n), 1);
  for (const auto& y : {boundary(2, 5), sphere(1, 5), delta(2, 5)}) expect_valid(wbar(dec(y)));
  expect_valid(wbar(box_product(delta(1, 3), boundary(2, 3))));
  EXPECT_EQ(wbar_tuple(d, w, 1, 0).size(), 2u);
}

namespace {

// d_star(X) on the full universe of triples (x, α, β), x any simplex with
// n <= bound, identified along every θ. Returns class counts per bidegree.
std::map<std::pair<int, int>, int> coend_counts_oracle(const SimplicialSet& x) {
  std::map<std::pair<int, int>, int> out;
  const int d = x.bound();
  for (int p = 0; p < d; ++p) {
    for (int q = 0; p + q + 1 <= d; ++q) {
      std::map<std::tuple<int, int, ordinal::Map, ordinal::Map>, int> index;
      for (int n = 0; n <= d; ++n)
        for (int s = 0; s < x.size(n); ++s)
          for (const auto& a : ordinal::all_maps(p, n))
            for (const auto& b : ordinal::all_maps(q, n))
              index.emplace(std::tuple{n, s, a, b}, static_cast<int>(index.size()));
      UnionFind uf(index.size());
      for (const auto& [key, k] : index) {
        const auto& [m, s, a, b] = key;
        for (int n = 0; n <= d; ++n)
          for (const auto& theta : ordinal::all_maps(m, n))
            for (int y = 0; y < x.size(n); ++y)
              if (x.act(n, y, theta) == s)
                uf.unite(k, index.at({n, y, ordinal::compose(theta, a), ordinal::compose(theta, b)}));
      }
      uf.classes(&out[{p, q}]);
    }
  }
  return out;
}

}  // namespace

TEST(Bisimplicial, DStarMatchesWideCoend) {
  for (const auto& x : {delta(1, 3), boundary(2, 3), sphere(1, 3), horn(2, 1, 3)}) {
    BisimplicialSet b = d_star(x);
    expect_valid(b);
    for (const auto& [pq, count] : coend_counts_oracle(x)) EXPECT_EQ(b.size(pq.first, pq.second), count);
  }
}

TEST(Bisimplicial, DStarOfSimplexIsBox) {
  for (int n = 0; n <= 3; ++n) {
    const int d = 5;
    SimplicialSet dn = delta(n, d);
    BisimplicialSet b = d_star(dn);
    BisimplicialSet box = box_product(dn, dn);
    auto reps = d_star_representatives(dn);
    std::vector<std::vector<ordinal::Map>> keys;
    delta_subcomplex(n, d, [](const ordinal::Map&) { return true; }, &keys);
    auto key_id = [&](int k, const ordinal::Map& t) {
      return static_cast<int>(std::lower_bound(keys[k].begin(), keys[k].end(), t) - keys[k].begin());
    };
    std::map<std::pair<int, int>, std::vector<int>> phi;
    for (int p = 0; p < d; ++p) {
      for (int q = 0; p + q + 1 <= d; ++q) {
        ASSERT_EQ(b.size(p, q), box.size(p, q));
        auto& f = phi[{p, q}];
        for (int id = 0; id < b.size(p, q); ++id) {
          const DStarRep& r = reps[p][q][id];
          const ordinal::Map& mu = keys[r.n][r.x];
          f.push_back(key_id(p, ordinal::compose(mu, r.alpha)) * dn.size(q) +
                      key_id(q, ordinal::compose(mu, r.beta)));
        }
        EXPECT_EQ(std::set<int>(f.begin(), f.end()).size(), f.size());
      }
    }
    for (const auto& [pq, f] : phi) {
      auto [p, q] = pq;
      for (int id = 0; id < b.size(p, q); ++id) {
        for (int i = 0; p >= 1 && i <= p; ++i)
          EXPECT_EQ((phi[{p - 1, q}][b.dh(p, q, i, id)]), box.dh(p, q, i, f[id]));
        for (int i = 0; q >= 1 && i <= q; ++i)
          EXPECT_EQ((phi[{p, q - 1}][b.dv(p, q, i, id)]), box.dv(p, q, i, f[id]));
      }
    }
  }
  BisimplicialSet t = d_star(point(4));
  for (int q = 0; q < 4; ++q)
    for (int p = 0; p + q + 1 <= 4; ++p) EXPECT_EQ(t.size(p, q), 1);
}

TEST(Bisimplicial, DiagOfDStarBoundaryHasCircleShape) {
  SimplicialSet dg = diag(d_star(boundary(2, 5)));
  expect_valid(dg);
  EXPECT_EQ(dg.bound(), 2);
}

TEST(CSigma, GeneratingFaces) {
  SimplicialSet v = c_sigma(2, {0}, 2);
  EXPECT_EQ(nondegenerate_counts(v), (std::vector<int>{3, 2, 0}));
  SimplicialSet e = c_sigma(2, {0, 1}, 2);
  EXPECT_EQ(nondegenerate_counts(e), (std::vector<int>{2, 1, 0}));
  SimplicialSet dg = c_sigma(2, {1, 1}, 2);
  EXPECT_EQ(nondegenerate_counts(dg), (std::vector<int>{3, 2, 0}));
  EXPECT_THROW(c_sigma(2, {0, 1, 2}, 2), InputError);
  // Every C^σ of ∂Δ³ for a vertex is three triangles around it.
  EXPECT_EQ(nondegenerate_counts(c_sigma(3, {2}, 3)), (std::vector<int>{4, 6, 3, 0}));
}

TEST(Maps, SmallCounts) {
  SimplicialSet d1 = delta(1, 2);
  EXPECT_EQ(count_maps(point(2), d1), 2u);
  EXPECT_EQ(count_maps(boundary(1, 2), d1), 4u);
  EXPECT_EQ(count_maps(d1, d1), 3u);
  EXPECT_EQ(count_maps(delta(2, 2), boundary(2, 2)), 9u);
  auto s = share(sphere(1, 3));
  auto maps = enumerate_maps(s, s, true);
  for (const auto& f : maps) EXPECT_TRUE(f.audit().empty());
  EXPECT_EQ(maps.size(), 2u);
}
