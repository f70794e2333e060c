#include <gtest/gtest.h>

#include <random>

#include "simpcat/cat/category.hpp"
#include "simpcat/cat/operations.hpp"
#include "simpcat/homotopy/fundamental.hpp"
#include "simpcat/homotopy/homology.hpp"
#include "simpcat/homotopy/probe.hpp"
#include "simpcat/sset/maps.hpp"
#include "simpcat/sset/standard.hpp"

using namespace simpcat;

namespace {

using G = AbelianGroupDescriptor;

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

DenseMatrix dense(std::initializer_list<std::initializer_list<int>> rows) {
  DenseMatrix m;
  for (auto r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

SparseMatrix to_sparse(const DenseMatrix& d) {
  SparseMatrix s(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (int r = 0; r < s.rows; ++r)
    for (int c = 0; c < s.cols; ++c)
      if (d[r][c] != 0) s.add(r, c, static_cast<int>(d[r][c]));
  return s;
}

SimplicialMap first_map(SSetPtr x, SSetPtr y, const std::vector<std::vector<int>>& forced = {}) {
  MapSearchOptions opt;
  opt.forced = forced;
  SimplicialMap out{x, y, {}};
  bool got = false;
  for_each_map(*x, *y, opt, [&](const std::vector<std::vector<int>>& image) {
    if (!got) out.image = image;
    got = true;
  });
  if (!got) throw std::runtime_error("no map");
  return out;
}

// The inclusion of a subcomplex built with lexicographic vertex-sequence keys.
SimplicialMap include_boundary(int n, int bound) {
  std::vector<std::vector<ordinal::Map>> kb, kd;
  auto b = share(delta_subcomplex(n, bound, [n](const ordinal::Map& t) {
    for (int v = 0; v <= n; ++v)
      if (std::find(t.begin(), t.end(), v) == t.end()) return true;
    return false;
  }, &kb));
  auto d = share(delta_subcomplex(n, bound, [](const ordinal::Map&) { return true; }, &kd));
  SimplicialMap f{b, d, {}};
  f.image.resize(bound + 1);
  for (int k = 0; k <= bound; ++k)
    for (const auto& t : kb[k])
      f.image[k].push_back(static_cast<int>(std::find(kd[k].begin(), kd[k].end(), t) - kd[k].begin()));
  return f;
}

}  // namespace

TEST(Smith, KnownInvariants) {
  EXPECT_EQ(smith_invariants(dense({{1, 1}, {1, -1}})), ints({1, 2}));
  EXPECT_EQ(smith_invariants(dense({{2, 4}, {6, 8}})), ints({2, 4}));
  EXPECT_EQ(smith_invariants(dense({{2, 0}, {0, 3}})), ints({1, 6}));
  EXPECT_EQ(smith_invariants(dense({{0, 0}, {0, 0}})), ints({}));
  EXPECT_EQ(smith_invariants(dense({{4}})), ints({4}));
}

TEST(Smith, InvariantUnderUnimodularChangeOfBasis) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), pick(0, 3), coef(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    DenseMatrix a(4, std::vector<Integer>(4));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    const auto expected = smith_invariants(a);
    DenseMatrix b = a;
    for (int step = 0; step < 12; ++step) {
      const int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const int k = coef(rng);
      if (step % 2 == 0)
        for (int c = 0; c < 4; ++c) b[i][c] += k * b[j][c];
      else
        for (int r = 0; r < 4; ++r) b[r][i] += k * b[r][j];
    }
    EXPECT_EQ(smith_invariants(b), expected);
    EXPECT_EQ(smith_invariants(to_sparse(b)), expected);
  }
}

TEST(Smith, SparseAgreesWithDenseOnRandomMatrices) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2), dim(1, 7);
  for (int trial = 0; trial < 80; ++trial) {
    const int r = dim(rng), c = dim(rng);
    DenseMatrix a(r, std::vector<Integer>(c));
    for (auto& row : a)
      for (auto& v : row) v = trial % 3 == 0 ? 2 * entry(rng) : entry(rng);
    EXPECT_EQ(smith_invariants(to_sparse(a)), smith_invariants(a));
  }
}

TEST(Homology, StandardObjects) {
  EXPECT_EQ(homology_up_to(delta(2, 3), 2), (std::vector<G>{G::free(1), {}, {}}));
  EXPECT_EQ(homology_up_to(boundary(2, 3), 2), (std::vector<G>{G::free(1), G::free(1), {}}));
  EXPECT_EQ(homology_up_to(sphere(1, 3), 2), (std::vector<G>{G::free(1), G::free(1), {}}));
  EXPECT_EQ(homology_up_to(sphere(2, 3), 2), (std::vector<G>{G::free(1), {}, G::free(1)}));
  EXPECT_EQ(homology_up_to(boundary(3, 3), 2), (std::vector<G>{G::free(1), {}, G::free(1)}));
  EXPECT_EQ(homology_up_to(two_point(2), 1), (std::vector<G>{G::free(2), {}}));
  EXPECT_EQ(reduced_homology_up_to(horn(3, 1, 3), 2), (std::vector<G>{{}, {}, {}}));
  EXPECT_THROW(homology_up_to(delta(2, 2), 2), InputError);
}

TEST(Homology, NerveOfCyclicGroupOfOrderTwo) {
  const auto h = homology_up_to(nerve(cyclic_group(2), 4), 3);
  EXPECT_EQ(h[0], G::free(1));
  EXPECT_EQ(h[1], G::cyclic(2));
  EXPECT_EQ(h[2], G{});
  EXPECT_EQ(h[3], G::cyclic(2));
  EXPECT_EQ(h[1].to_string(), "Z/2");
}

TEST(Homology, NerveOfCyclicGroupOfOrderThree) {
  const auto h = homology_up_to(nerve(cyclic_group(3), 3), 2);
  EXPECT_EQ(h[1], G::cyclic(3));
  EXPECT_TRUE(h[2].trivial());
}

TEST(Homology, ChainsSquareToZero) {
  for (const auto& x : {delta(3, 4), boundary(3, 4), sphere(2, 4), horn(3, 0, 4)})
    EXPECT_TRUE(normalized_chains(x).is_complex());
  EXPECT_TRUE(normalized_chains(nerve(chaotic_category(3), 4)).is_complex());
}

TEST(Homology, MappingConeOfBoundaryInclusion) {
  const SimplicialMap f = include_boundary(2, 3);
  ASSERT_TRUE(f.audit().empty());
  const ChainComplex cone = mapping_cone(f, 3);
  EXPECT_TRUE(cone.is_complex());
  const auto h = cone.homology(2);
  EXPECT_TRUE(h[0].trivial());
  EXPECT_TRUE(h[1].trivial());
  EXPECT_EQ(h[2], G::free(1));
}

TEST(Fundamental, EdgePathGroups) {
  const auto s1 = sphere(1, 2);
  const auto g = edge_path_group(s1, 0);
  EXPECT_EQ(g.generators, 1);
  EXPECT_TRUE(g.relators.empty());
  EXPECT_EQ(abelianization(g), G::free(1));
  EXPECT_EQ(abelianization(edge_path_group(boundary(2, 2), 0)), G::free(1));
  EXPECT_TRUE(abelianization(edge_path_group(delta(2, 2), 0)).trivial());
  EXPECT_TRUE(abelianization(edge_path_group(boundary(3, 2), 1)).trivial());
}

TEST(Fundamental, HurewiczInDegreeOne) {
  std::vector<SimplicialSet> spaces{sphere(1, 3), boundary(2, 3), boundary(3, 3), horn(2, 1, 3),
                                    nerve(cyclic_group(2), 3), nerve(cyclic_group(4), 3)};
  for (const auto& x : spaces)
    EXPECT_EQ(abelianization(edge_path_group(x, 0)), homology(x, 1));
}

TEST(Fundamental, ComponentsOfTwoPoint) {
  const auto c = pi0(two_point(2));
  EXPECT_EQ(c.count, 2);
  EXPECT_EQ(component(two_point(2), 1).size(0), 1);
}

TEST(Probe, Verdicts) {
  auto pt = share(point(3));
  auto d1 = share(delta(1, 3));
  EXPECT_EQ(weak_equivalence_probe(first_map(pt, d1), 2).kind, ProbeVerdict::Kind::ConfirmedUpTo);

  const SimplicialMap inc = include_boundary(2, 3);
  const auto v = weak_equivalence_probe(inc, 2);
  EXPECT_EQ(v.kind, ProbeVerdict::Kind::Refuted);
  EXPECT_EQ(v.degree, 1);

  auto tp = share(two_point(3));
  const auto w = weak_equivalence_probe(first_map(tp, pt), 1);
  EXPECT_EQ(w.kind, ProbeVerdict::Kind::Refuted);
  EXPECT_EQ(w.invariant, "pi0");

  EXPECT_EQ(weak_equivalence_probe(first_map(pt, d1), 3).kind, ProbeVerdict::Kind::Inconclusive);
}

TEST(Probe, HornInclusionIsConfirmed) {
  for (int i = 0; i <= 2; ++i) {
    auto h = share(horn(2, i, 3));
    auto d = share(delta(2, 3));
    std::vector<std::vector<int>> forced(1, std::vector<int>(h->size(0)));
    for (int v = 0; v < h->size(0); ++v) forced[0][v] = v;
    EXPECT_TRUE(weak_equivalence_probe(first_map(h, d, forced), 2).confirmed());
  }
}
