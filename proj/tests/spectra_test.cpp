#include <gtest/gtest.h>

#include <algorithm>

#include "simpcat/homotopy/homology.hpp"
#include "simpcat/scat/pointed.hpp"
#include "simpcat/spectra/ktheory.hpp"
#include "simpcat/spectra/spectrum.hpp"
#include "simpcat/sset/standard.hpp"

using namespace simpcat;

namespace {

SimplicialCategory constant(Category c, int bound) {
  return SimplicialCategory::constant(share(std::move(c)), bound, 0);
}

std::vector<std::string> reduced(const SimplicialSet& x, int top) {
  std::vector<std::string> out;
  for (const auto& h : reduced_homology_up_to(x, top)) out.push_back(h.to_string());
  return out;
}

using Kind = OmegaLevelVerdict::Kind;

// Id of the simplex with vertices 0, 1, ..., n in Δⁿ.
int iota(const SimplicialSet& grid, int n) {
  std::vector<int> want(n + 1);
  for (int k = 0; k <= n; ++k) want[k] = k;
  for (int s = 0; s < grid.size(n); ++s)
    if (grid.vertices(n, s) == want) return s;
  return -1;
}

}  // namespace

TEST(Spectrum, SuspensionLadder) {
  const auto s = sigma_infinity(s0_scat(3), 3);
  ASSERT_EQ(s.length(), 3);
  EXPECT_TRUE(s.audit().empty());
  EXPECT_EQ(*s.levels[0], s0_scat(3));
  for (int n = 0; n < 3; ++n) {
    std::vector<std::string> want(3, "0");
    want[n] = "Z";
    EXPECT_EQ(reduced(diag_nerve_iso(*s.levels[n]), 2), want) << n;
  }
  for (int n = 0; n + 1 < 3; ++n) EXPECT_EQ(*s.levels[n + 1], suspend(*s.levels[n]));
}

TEST(Spectrum, TerminalLevels) {
  const auto s = sigma_infinity(terminal_scat(3), 4);
  for (const auto& l : s.levels) EXPECT_EQ(*l, terminal_scat(3));
}

TEST(Spectrum, Shift) {
  const auto s = sigma_infinity(s0_scat(3), 4);
  const auto t = shift(s);
  EXPECT_EQ(t.length(), 3);
  EXPECT_EQ(*t.levels[0], suspend(s0_scat(3)));
  EXPECT_TRUE(t.audit().empty());
  const auto tt = shift(t);
  EXPECT_EQ(tt.length(), 2);
  EXPECT_EQ(*tt.levels[0], *s.levels[2]);
  EXPECT_THROW(shift(shift(tt)), InputError);
}

TEST(Spectrum, FromLevelsNeedsTerminalNeighbours) {
  const auto s = spectrum_from_levels({terminal_scat(3), s0_scat(3), terminal_scat(3)});
  EXPECT_TRUE(s.audit().empty());
  EXPECT_THROW(spectrum_from_levels({s0_scat(3), s0_scat(3)}), InputError);
}

TEST(OmegaProbe, SuspensionSpectrumOfS0IsRefutedAtLevelZero) {
  const auto r = omega_spectrum_probe(sigma_infinity(s0_scat(3), 2), 1, 256);
  ASSERT_EQ(r.levels.size(), 1u);
  EXPECT_EQ(r.levels[0].kind, Kind::Refuted);
  EXPECT_EQ(r.levels[0].components, 2);
  EXPECT_FALSE(r.levels[0].loops.has_value());
  EXPECT_EQ(r.overall(), Kind::Refuted);
}

TEST(OmegaProbe, TerminalSpectrumIsConfirmed) {
  const auto r = omega_spectrum_probe(sigma_infinity(terminal_scat(3), 3));
  ASSERT_EQ(r.levels.size(), 2u);
  for (const auto& l : r.levels) EXPECT_EQ(l.kind, Kind::Confirmed);
  EXPECT_EQ(r.overall(), Kind::Confirmed);
}

TEST(OmegaProbe, JunctionIsRefuted) {
  const auto r = omega_spectrum_probe(spectrum_from_levels({terminal_scat(3), s0_scat(3), terminal_scat(3)}));
  ASSERT_EQ(r.levels.size(), 2u);
  EXPECT_EQ(r.levels[0].kind, Kind::Confirmed);
  EXPECT_EQ(r.levels[1].kind, Kind::Refuted);
  EXPECT_EQ(r.overall(), Kind::Refuted);
}

TEST(MappingSpace, S0RecoversTheDiagonalNerve) {
  for (const auto& c : {s0_scat(3), constant(cyclic_group(2), 3), constant(chaotic_category(2), 3),
                        suspend(s0_scat(3))}) {
    const auto m = mapping_space(two_point(3), c, 2);
    EXPECT_TRUE(m.space.audit().empty());
    const auto d = diag_nerve_iso(c, 2);
    EXPECT_EQ(m.space.sizes(), d.sizes());
    const SimplicialMap ev = evaluate_s0(m);
    EXPECT_TRUE(ev.audit().empty());
    // Evaluation at (x1, ι) is a simplicial isomorphism onto diag N iso C.
    const SimplicialSet x = two_point(m.target->bound());
    for (int n = 0; n <= 2; ++n) {
      const SimplicialSet grid = delta(n, m.target->bound());
      int x1 = 1;
      for (int k = 0; k < n; ++k) x1 = x.degeneracy(k, 0, x1);
      const int top = iota(grid, n);
      ASSERT_TRUE(grid.is_nondegenerate(n, top));
      std::vector<int> eval;
      for (const auto& image : m.maps[n]) eval.push_back(image[n][x1 * grid.size(n) + top]);
      std::vector<int> sorted = eval;
      std::sort(sorted.begin(), sorted.end());
      for (int s = 0; s < d.size(n); ++s) EXPECT_EQ(sorted[s], s);
      for (int i = 0; n >= 1 && i <= n; ++i)
        for (int f = 0; f < m.space.size(n); ++f) {
          const int g = m.space.face(n, i, f);
          const SimplicialSet lower = delta(n - 1, m.target->bound());
          int y1 = 1;
          for (int k = 0; k + 1 < n; ++k) y1 = x.degeneracy(k, 0, y1);
          EXPECT_EQ(m.maps[n - 1][g][n - 1][y1 * lower.size(n - 1) + iota(lower, n - 1)], d.face(n, i, eval[f]));
        }
    }
  }
}

TEST(MappingSpace, EvaluationNeedsS0) {
  EXPECT_THROW(evaluate_s0(mapping_space(sphere(1, 2), s0_scat(3), 1)), InputError);
}

TEST(MappingSpace, PointAndTwoPoints) {
  const auto p = mapping_space(point(2).with_basepoint(0), s0_scat(3), 2);
  EXPECT_EQ(p.space.sizes(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(mapping_space(two_point(2), s0_scat(3), 1).space.size(0), 2);
  EXPECT_THROW(mapping_space(two_point(2), s0_scat(2), 3), InputError);
}

TEST(MappingSpace, CircleIntoSuspension) {
  // diag N iso ΣS⁰ is not Kan: its loop class needs two edges, so the
  // one-edge circle only maps in constantly.
  const auto m = mapping_space(sphere(1, 2), suspend(s0_scat(3)), 1);
  EXPECT_TRUE(m.space.audit().empty());
  EXPECT_EQ(m.space.size(0), 1);
}

TEST(KTheory, CyclicGroup) {
  const auto r = k_groups(constant(cyclic_group(2), 4), 3);
  EXPECT_EQ(r.components, 1);
  EXPECT_EQ(r.pi1_abelian.to_string(), "Z/2");
  EXPECT_TRUE(r.consistent());
  ASSERT_EQ(r.higher_homology.size(), 2u);
  EXPECT_EQ(r.higher_homology[0].to_string(), "0");
  EXPECT_EQ(r.higher_homology[1].to_string(), "Z/2");
  EXPECT_FALSE(r.caveat.empty());
}

TEST(KTheory, TerminalAndS0) {
  const auto t = k_groups(terminal_scat(3), 2);
  EXPECT_EQ(t.components, 1);
  EXPECT_TRUE(t.pi1_abelian.trivial());
  for (const auto& h : t.higher_homology) EXPECT_TRUE(h.trivial());
  const auto s = k_groups(s0_scat(3), 1);
  EXPECT_EQ(s.components, 2);
  EXPECT_EQ(s.pi1.generators, 0);
  EXPECT_TRUE(s.consistent());
}

TEST(KTheory, HurewiczOnCorpus) {
  for (const auto& c : {suspend(s0_scat(3)), suspend(suspend(s0_scat(3))), constant(cyclic_group(3), 3),
                        constant(chaotic_category(3), 3), rho(sphere(1, 6), RhoChoice::PiDec)}) {
    const auto r = k_groups(c, 2);
    EXPECT_TRUE(r.consistent()) << r.pi1_abelian.to_string() << " vs " << r.h1_basepoint.to_string();
  }
}
