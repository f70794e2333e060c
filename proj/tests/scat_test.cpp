#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "simpcat/cat/operations.hpp"
#include "simpcat/homotopy/fundamental.hpp"
#include "simpcat/homotopy/homology.hpp"
#include "simpcat/scat/colimits.hpp"
#include "simpcat/scat/levelwise.hpp"
#include "simpcat/scat/pointed.hpp"
#include "simpcat/sset/maps.hpp"
#include "simpcat/sset/operations.hpp"
#include "simpcat/sset/standard.hpp"

using namespace simpcat;

namespace {

SimplicialCategory constant(Category c, int bound, std::optional<int> bp = 0) {
  return SimplicialCategory::constant(share(std::move(c)), bound, bp);
}

std::vector<std::string> reduced(const SimplicialSet& x, int top) {
  std::vector<std::string> out;
  for (const auto& h : reduced_homology_up_to(x, top)) out.push_back(h.to_string());
  return out;
}

// ∂Δ¹ -> Δ¹ at the given bound.
SimplicialMap endpoints(int bound) {
  auto bd = share(boundary(1, bound));
  auto iv = share(delta(1, bound));
  SimplicialMap inc{bd, iv, {}};
  for (int n = 0; n <= bound; ++n) inc.image.push_back({0, iv->size(n) - 1});
  return inc;
}

// Corpus of pointed simplicial categories at bound 3.
std::vector<SimplicialCategory> corpus() {
  return {terminal_scat(3),
          s0_scat(3),
          constant(cyclic_group(2), 3),
          constant(chaotic_category(3), 3),
          constant(ordinal_category(1), 3),
          suspend(s0_scat(3)),
          rho(sphere(1, 6), RhoChoice::PiDec),
          rho(delta(1, 6), RhoChoice::PiDStar).with_basepoint(0)};
}

}  // namespace

TEST(PiLevelwise, DStarOfIntervalIsCopiesOfChaoticPairs) {
  for (int bound : {4, 6}) {
    const auto c = pi_levelwise(d_star(delta(1, bound)));
    EXPECT_EQ(c.bound(), bound - 3);
    EXPECT_TRUE(c.audit().empty());
    for (int n = 0; n <= c.bound(); ++n) {
      // Row n is |Δ¹_n| = n + 2 disjoint copies of Δ¹.
      EXPECT_EQ(c.level(n).object_count(), 2 * (n + 2));
      EXPECT_EQ(c.level(n).morphism_count(), 4 * (n + 2));
      EXPECT_TRUE(c.level(n).is_groupoid());
    }
  }
}

TEST(PiLevelwise, DecOfCircle) {
  const auto c = rho(sphere(1, 6), RhoChoice::PiDec);
  EXPECT_TRUE(c.audit().empty());
  ASSERT_EQ(c.bound(), 3);
  for (int q = 0; q <= 3; ++q) {
    // Objects are S¹_{q+1}: one chaotic pair and q isolated objects.
    EXPECT_EQ(c.level(q).object_count(), q + 2);
    EXPECT_EQ(c.level(q).morphism_count(), q + 4);
  }
  EXPECT_TRUE(c.pointed());
}

TEST(PiLevelwise, BoxOfPointsIsTerminal) {
  const auto c = pi_levelwise(box_product(point(4), point(4)));
  for (int n = 0; n <= c.bound(); ++n) {
    EXPECT_EQ(c.level(n).object_count(), 1);
    EXPECT_EQ(c.level(n).morphism_count(), 1);
  }
}

TEST(PiLevelwise, MapIsSimplicialFunctor) {
  const SimplicialMap inc = endpoints(6);
  for (auto choice : {RhoChoice::PiDStar, RhoChoice::PiDec}) {
    auto a = share(rho(*inc.source, choice));
    auto b = share(rho(*inc.target, choice));
    EXPECT_TRUE(rho_map(inc, choice, a, b).audit().empty());
  }
}

TEST(NerveIsoLevelwise, ConstantGroupHasConstantRows) {
  const auto c = constant(cyclic_group(2), 3);
  const auto b = nerve_iso_levelwise(c, BidegreeShape::rectangle(3, 3));
  EXPECT_TRUE(b.audit().empty());
  const auto n = nerve(cyclic_group(2), 3, 0);
  for (int q = 0; q <= 3; ++q) EXPECT_EQ(b.horizontal(q), n);
}

TEST(NerveIsoLevelwise, ChaoticCounts) {
  const auto c = pi_levelwise(d_star(delta(1, 6)));
  const auto b = nerve_iso_levelwise(c, BidegreeShape::rectangle(3, 3));
  EXPECT_TRUE(b.audit().empty());
  // n + 2 chaotic pairs at level n, each with 2^{p+1} p-chains.
  for (int p = 0; p <= 3; ++p)
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(b.size(p, n), (n + 2) * (1 << (p + 1)));
}

TEST(NerveIsoLevelwise, TerminalAndNonInvertibleMorphisms) {
  const auto t = nerve_iso_levelwise(terminal_scat(2), 3);
  for (int q = 0; q <= t.shape().max_q(); ++q)
    for (int p = 0; p <= t.shape().max_p(q); ++p) EXPECT_EQ(t.size(p, q), 1);
  // Only identities of the arrow category are invertible.
  const auto a = nerve_iso_levelwise(constant(ordinal_category(1), 2), 3);
  EXPECT_EQ(a.size(2, 0), 2);
}

TEST(DiagNerveIso, ConstantGroup) {
  const auto c = constant(cyclic_group(2), 4);
  const auto d = diag_nerve_iso(c);
  EXPECT_EQ(d, nerve(cyclic_group(2), 4, 0));
  EXPECT_EQ(homology(d, 1).to_string(), "Z/2");
  const auto t = diag_nerve_iso(terminal_scat(3));
  EXPECT_EQ(t.sizes(), point(3).sizes());
}

TEST(DiagNerveIso, RecoversBoundaryHomology) {
  const auto c = pi_levelwise(d_star(boundary(2, 6)));
  const auto d = diag_nerve_iso(c, 3);
  for (int i = 0; i <= 1; ++i) EXPECT_EQ(homology(d, i), homology(boundary(2, 3), i)) << i;
}

TEST(DiagNerveIso, MapOfRhoInclusion) {
  const SimplicialMap inc = endpoints(6);
  auto a = share(rho(*inc.source, RhoChoice::PiDStar));
  auto b = share(rho(*inc.target, RhoChoice::PiDStar));
  const auto f = rho_map(inc, RhoChoice::PiDStar, a, b);
  auto da = share(diag_nerve_iso(*a));
  auto db = share(diag_nerve_iso(*b));
  const auto g = diag_nerve_iso_map(f, da, db);
  EXPECT_TRUE(g.audit().empty());
  const auto id = diag_nerve_iso_map(SimplicialFunctor::identity(b), db, db);
  EXPECT_EQ(id.image, SimplicialMap::identity(db).image);
}

TEST(WbarNerveIso, ConstantGroupHasGroupHomology) {
  const auto w = wbar_nerve_iso(constant(cyclic_group(3), 3));
  EXPECT_TRUE(w.audit().empty());
  EXPECT_EQ(homology(w, 1).to_string(), "Z/3");
}

TEST(ColimitScat, CoproductOfTerminalsIsS0) {
  SCatDiagram d;
  // The second leg misses the basepoint, so the summands enter unpointed.
  auto t = share(terminal_scat(3).with_basepoint(std::nullopt));
  d.objects = {t, t};
  const auto c = colimit_scat(d, 1000);
  EXPECT_EQ(c.apex->with_basepoint(0), s0_scat(3));
  for (const auto& leg : c.legs) EXPECT_TRUE(leg.audit().empty());
}

TEST(ColimitScat, PushoutAlongIdentity) {
  auto a = share(rho(delta(1, 6), RhoChoice::PiDec));
  auto t = share(terminal_scat(a->bound()));
  auto id = SimplicialFunctor::identity(a);
  auto g = to_terminal(a, t);
  const auto p = pushout_scat(id, g);
  EXPECT_TRUE(p.apex->audit().empty());
  EXPECT_TRUE(levelwise_bijective(p.legs[2]));
}

TEST(ColimitScat, LevelwiseGroupoidPushout) {
  // chaotic pair and Z/3 glued at one object: diag N iso has H₁ = Z/3.
  auto pt = share(terminal_scat(3));
  auto b = share(constant(chaotic_category(2), 3));
  auto c = share(constant(cyclic_group(3), 3));
  const auto p = pushout_scat(basepoint_functor(pt, b), basepoint_functor(pt, c), 1000, 0);
  EXPECT_TRUE(p.apex->audit().empty());
  for (const auto& leg : p.legs) EXPECT_TRUE(leg.audit().empty());
  const auto d = diag_nerve_iso(*p.apex);
  EXPECT_EQ(homology(d, 1).to_string(), "Z/3");
  EXPECT_EQ(homology(d, 2).to_string(), "0");
}

TEST(Tensor, WithPointIsIdentity) {
  for (const auto& c : corpus()) {
    const auto t = tensor_rho(c, point(c.bound() + 3), RhoChoice::PiDec);
    EXPECT_EQ(t.bound(), c.bound());
    for (int n = 0; n <= c.bound(); ++n) {
      EXPECT_EQ(t.level(n).object_count(), c.level(n).object_count());
      EXPECT_EQ(t.level(n).morphism_count(), c.level(n).morphism_count());
    }
  }
}

TEST(Tensor, ObjectCounts) {
  const auto t = tensor_rho(constant(cyclic_group(2), 3), delta(1, 6), RhoChoice::PiDec);
  EXPECT_EQ(t.level(0).object_count(), 3);
  EXPECT_TRUE(t.audit().empty());
  const auto u = tensor_rho(terminal_scat(3), delta(1, 6), RhoChoice::PiDec);
  for (int n = 0; n <= u.bound(); ++n) {
    // Row n of Dec Δ¹ splits over Δ¹_n into contractible pieces: one chaotic
    // pair and n + 1 single objects on the n + 3 simplices of Δ¹_{n+1}.
    EXPECT_EQ(u.level(n).object_count(), n + 3);
    EXPECT_EQ(u.level(n).morphism_count(), n + 5);
    EXPECT_EQ(pi0(nerve(u.level(n), 1)).count, n + 2);
  }
}

TEST(AddBasepoint, Counts) {
  const auto e = add_basepoint(constant(discrete_category(0), 2, std::nullopt));
  EXPECT_EQ(e, terminal_scat(2));
  const auto s = add_basepoint(constant(discrete_category(2), 3, std::nullopt));
  EXPECT_TRUE(s.audit().empty());
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(s.level(n).object_count(), 3);
  EXPECT_EQ(s.basepoint(2), 0);
}

TEST(Smash, UnitLaw) {
  for (const auto& c : corpus()) {
    const auto s = smash(c, two_point(c.bound() + 3), RhoChoice::PiDec);
    EXPECT_TRUE(s.audit().empty());
    EXPECT_TRUE(isomorphic(s, c));
  }
}

TEST(Smash, TerminalAbsorbs) {
  for (auto x : {sphere(1, 6), two_point(6), sphere(2, 6)}) {
    const auto s = smash(terminal_scat(3), x, RhoChoice::PiDec);
    EXPECT_EQ(s, terminal_scat(3));
  }
}

TEST(Smash, CircleAndTwoSphere) {
  const auto s1 = suspend(s0_scat(3));
  EXPECT_EQ(reduced(diag_nerve_iso(s1), 2), (std::vector<std::string>{"0", "Z", "0"}));
  const auto s2 = suspend(s1);
  EXPECT_EQ(reduced(diag_nerve_iso(s2), 2), (std::vector<std::string>{"0", "0", "Z"}));
  EXPECT_EQ(suspend(terminal_scat(3)), terminal_scat(3));
}

TEST(Smash, DisjointBasepointGivesOdot) {
  // The comparison C ⊙ X -> C ∧ X₊ induced by X -> X₊ is bijective at every level.
  for (auto x : {delta(1, 6), boundary(2, 6), two_point(6)}) {
    const auto cop = coproduct_sset({share(point(6)), share(x)});
    auto plus = share(cop.apex->with_basepoint(0));
    SimplicialMap leg = cop.legs[1];
    leg.target = plus;
    // Groupoid levels with simply connected components keep the colimits finite.
    for (const auto& c : {s0_scat(3), suspend(s0_scat(3)), constant(chaotic_category(3), 3)}) {
      const auto smashed = smash_cocone(c, *plus, RhoChoice::PiDec);
      const auto od = odot_cocone(c, x, RhoChoice::PiDec);
      auto rx = share(rho(*leg.source, RhoChoice::PiDec));
      auto rplus = share(rho(*plus, RhoChoice::PiDec));
      const auto iota = rho_map(leg, RhoChoice::PiDec, rx, rplus);
      SimplicialFunctor cmp{od.apex, smashed.apex, {}};
      for (int n = 0; n <= c.bound(); ++n) {
        const int ro = rx->level(n).object_count(), rm = rx->level(n).morphism_count();
        const int po = rplus->level(n).object_count(), pm = rplus->level(n).morphism_count();
        const auto& legs = smashed.levels[n].legs;
        const auto& io = iota.levels[n];
        cmp.levels.push_back(cocone_factor(
            od.levels[n], smashed.apex->level(n),
            [&](int k, int y) {
              if (k == 0) return legs[0].objects[(y / ro) * po + io.objects[y % ro]];
              if (k == 1) return legs[1].objects[io.objects[y]];
              return legs[3].objects[0];
            },
            [&](int k, int m) {
              if (k == 0) return legs[0].morphisms[(m / rm) * pm + io.morphisms[m % rm]];
              if (k == 1) return legs[1].morphisms[io.morphisms[m]];
              return legs[3].morphisms[0];
            }));
      }
      EXPECT_TRUE(cmp.audit().empty());
      EXPECT_TRUE(levelwise_bijective(cmp));
    }
  }
}

TEST(Cotensor, ByDisjointPointIsIdentity) {
  for (const auto& c : corpus()) {
    const auto t = cotensor(c, two_point(c.bound() + 3));
    EXPECT_TRUE(t.category.audit().empty());
    EXPECT_TRUE(isomorphic(t.category, c));
  }
}

TEST(Cotensor, IntoTerminal) {
  const auto t = cotensor(terminal_scat(3), sphere(1, 6));
  EXPECT_EQ(t.category, terminal_scat(3));
}

TEST(Cotensor, LoopsOnSuspendedS0) {
  // Bounded enumeration sees the constant loop and the loop of degree one.
  for (int b = 1; b <= 3; ++b) {
    const auto l = loop(suspend(s0_scat(b)));
    EXPECT_TRUE(l.category.audit().empty());
    EXPECT_EQ(pi0(diag_nerve_iso(l.category, 1)).count, 2);
  }
}

TEST(Cotensor, CapIsEnforced) {
  EXPECT_THROW(cotensor(suspend(s0_scat(3)), sphere(1, 6), RhoChoice::PiDec, 3), BoundExceeded);
}

TEST(Adjunction, HomCountsMatch) {
  const std::vector<std::function<SimplicialSet(int)>> xs = {
      [](int b) { return delta(0, b); }, [](int b) { return delta(1, b); },
      [](int b) { return boundary(1, b); }};
  for (const auto& c : corpus()) {
    const auto dg = diag_nerve_iso(c);
    const auto wb = wbar_nerve_iso(c);
    for (const auto& x : xs) {
      EXPECT_EQ(count_simplicial_functors(rho(x(c.bound() + 3), RhoChoice::PiDStar), c), count_maps(x(2), dg));
      EXPECT_EQ(count_simplicial_functors(rho(x(c.bound() + 3), RhoChoice::PiDec), c), count_maps(x(2), wb));
    }
  }
}

TEST(Pointed, BasepointStability) {
  std::vector<SimplicialCategory> outs = corpus();
  outs.push_back(suspend(suspend(s0_scat(3))));
  outs.push_back(cotensor(suspend(s0_scat(2)), sphere(1, 5)).category);
  outs.push_back(add_basepoint(constant(ordinal_category(2), 3, std::nullopt)));
  for (const auto& c : outs) {
    ASSERT_TRUE(c.pointed());
    EXPECT_TRUE(c.audit().empty());
    for (int n = 0; n <= c.bound(); ++n) {
      for (int i = 0; n >= 1 && i <= n; ++i) EXPECT_EQ(c.face(n, i).objects[c.basepoint(n)], c.basepoint(n - 1));
      for (int j = 0; n < c.bound() && j <= n; ++j)
        EXPECT_EQ(c.degeneracy(n, j).objects[c.basepoint(n)], c.basepoint(n + 1));
    }
  }
}

TEST(Equalizer, InclusionsAreEffectiveMonos) {
  auto check = [](const SimplicialFunctor& i) {
    const auto p = pushout_scat(i, i);
    const auto e = equalizer_scat(p.legs[1], p.legs[2]);
    EXPECT_TRUE(e.object->audit().empty());
    for (int n = 0; n <= i.source->bound(); ++n) {
      const auto& im = i.levels[n];
      const auto& eq = e.inclusion.levels[n];
      EXPECT_EQ(std::set<int>(im.objects.begin(), im.objects.end()), std::set<int>(eq.objects.begin(), eq.objects.end()));
      EXPECT_EQ(std::set<int>(im.morphisms.begin(), im.morphisms.end()),
                std::set<int>(eq.morphisms.begin(), eq.morphisms.end()));
    }
  };
  // Instances with finite pushouts D ⊔_C D.
  auto pt = share(terminal_scat(3));
  check(basepoint_functor(pt, share(constant(chaotic_category(3), 3))));
  check(basepoint_functor(pt, share(constant(ordinal_category(1), 3))));
  check(basepoint_functor(pt, share(suspend(s0_scat(3)))));
  auto o1 = share(constant(ordinal_category(1), 3, std::nullopt));
  auto o2 = share(constant(ordinal_category(2), 3, std::nullopt));
  for (const auto& f : enumerate_functors(o1->level(0), o2->level(0)))
    if (f.objects == std::vector<int>{0, 1}) check(SimplicialFunctor{o1, o2, std::vector<FunctorMap>(4, f)});
  auto v = share(delta(0, 6));
  auto iv = share(delta(1, 6));
  SimplicialMap vertex{v, iv, {}};
  for (int n = 0; n <= 6; ++n) vertex.image.push_back({0});
  ASSERT_TRUE(vertex.audit().empty());
  for (auto choice : {RhoChoice::PiDStar, RhoChoice::PiDec}) {
    auto a = share(rho(*v, choice));
    auto b = share(rho(*iv, choice));
    check(rho_map(vertex, choice, a, b));
  }
}
