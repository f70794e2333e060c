#include <gtest/gtest.h>

#include <set>

#include "simpcat/cat/category.hpp"
#include "simpcat/cat/operations.hpp"
#include "simpcat/cat/presented.hpp"
#include "simpcat/homotopy/homology.hpp"
#include "simpcat/sset/maps.hpp"
#include "simpcat/sset/standard.hpp"

using namespace simpcat;

namespace {

// Checks that two categories are isomorphic by searching for an invertible functor.
bool isomorphic(const Category& a, const Category& b) {
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  for (const auto& f : enumerate_functors(a, b)) {
    std::set<int> hit(f.morphisms.begin(), f.morphisms.end());
    std::set<int> obj(f.objects.begin(), f.objects.end());
    if (static_cast<int>(hit.size()) == b.morphism_count() && static_cast<int>(obj.size()) == b.object_count())
      return true;
  }
  return false;
}

}  // namespace

TEST(Category, StandardCategoriesValidate) {
  for (const auto& c : {cyclic_group(2), cyclic_group(5), chaotic_category(3), ordinal_category(3),
                        discrete_category(2), product_category(cyclic_group(2), ordinal_category(1))})
    EXPECT_TRUE(c.validate().empty());
  EXPECT_EQ(ordinal_category(2).morphism_count(), 6);
  EXPECT_EQ(product_category(cyclic_group(2), chaotic_category(2)).morphism_count(), 8);
}

TEST(Category, BrokenTableIsReported) {
  // The declared identity does not act trivially.
  const Category c = Category::build(1, {0, 0}, {0, 0}, {0}, [](int g, int f) { return g == 0 ? 1 - f : (g + f) % 2; });
  EXPECT_FALSE(c.validate().empty());
  EXPECT_THROW(Category::build(2, {0}, {1}, {0, 0}, [](int, int f) { return f; }), AuditFailure);
}

TEST(Category, Inverses) {
  const Category z = cyclic_group(4);
  EXPECT_EQ(z.inverse(1), 3);
  EXPECT_TRUE(z.is_groupoid());
  const Category o = ordinal_category(1);
  EXPECT_FALSE(o.is_groupoid());
  EXPECT_EQ(iso_subgroupoid(o).category.morphism_count(), 2);
  EXPECT_EQ(iso_subgroupoid(chaotic_category(3)).category.morphism_count(), 9);
}

TEST(Nerve, CountsAndIdentities) {
  const auto n = nerve(ordinal_category(2), 3);
  EXPECT_TRUE(n.audit().empty());
  EXPECT_EQ(n.sizes(), delta(2, 3).sizes());
  const auto z = nerve(cyclic_group(3), 3);
  EXPECT_EQ(z.sizes(), (std::vector<int>{1, 3, 9, 27}));
  EXPECT_TRUE(z.audit().empty());
  EXPECT_EQ(nerve_chain(cyclic_group(3), 2, 5), (std::vector<int>{1, 2}));
}

TEST(Nerve, NerveOfOrdinalIsSimplex) {
  EXPECT_EQ(count_maps(delta(1, 2), nerve(chaotic_category(2), 2)), 4u);
  EXPECT_EQ(count_maps(delta(2, 2), nerve(ordinal_category(2), 2)), count_maps(delta(2, 2), delta(2, 2)));
}

TEST(Nerve, FunctorMapIsSimplicial) {
  auto a = share(ordinal_category(1));
  auto b = share(chaotic_category(2));
  Functor f{a, b, {{0, 1}, {0, 1, 3}}};
  ASSERT_TRUE(f.audit().empty());
  auto na = share(nerve(*a, 3));
  auto nb = share(nerve(*b, 3));
  EXPECT_TRUE(nerve_map(f, na, nb).audit().empty());
}

TEST(Equivalence, Verdicts) {
  auto pt = share(terminal_category());
  auto ch = share(chaotic_category(3));
  EXPECT_TRUE(check_equivalence({pt, ch, {{0}, {0}}}).equivalence());
  auto o = share(ordinal_category(1));
  const auto v = check_equivalence({pt, o, {{0}, {0}}});
  EXPECT_TRUE(v.fully_faithful);
  EXPECT_FALSE(v.essentially_surjective);
}

TEST(FunctorCategory, ChaoticIntoCyclic) {
  const auto fc = functor_category(chaotic_category(2), cyclic_group(2));
  EXPECT_EQ(fc.functors.size(), 2u);
  EXPECT_EQ(fc.category.morphism_count(), 8);
  EXPECT_TRUE(fc.category.validate().empty());
  EXPECT_TRUE(fc.category.is_groupoid());
}

TEST(FunctorCategory, ArrowCategoryOfPoint) {
  const auto fc = functor_category(ordinal_category(1), ordinal_category(1));
  EXPECT_EQ(fc.functors.size(), 3u);
  EXPECT_TRUE(fc.category.validate().empty());
  EXPECT_THROW(functor_category(cyclic_group(3), cyclic_group(3), 2), BoundExceeded);
}

TEST(Equalizer, AgreementSubcategory) {
  auto c = share(ordinal_category(1));
  auto d = share(chaotic_category(2));
  Functor f{c, d, {{0, 1}, {0, 1, 3}}};
  Functor g{c, d, {{0, 0}, {0, 0, 0}}};
  const auto e = equalizer_cat(f, g);
  EXPECT_EQ(e.objects, std::vector<int>{0});
  EXPECT_EQ(e.category.morphism_count(), 1);
}

TEST(Presented, CyclicGroupFromRelation) {
  Presentation p;
  p.objects = 1;
  const int t = p.add_generator(0, 0);
  p.relate(0, {t, t, t}, {});
  const auto m = materialize_category(p, 100);
  EXPECT_EQ(m.category.morphism_count(), 3);
  EXPECT_TRUE(m.category.validate().empty());
  EXPECT_TRUE(isomorphic(m.category, cyclic_group(3)));
  const auto g = materialize_groupoid(p, 100);
  EXPECT_TRUE(isomorphic(g.category, cyclic_group(3)));
}

TEST(Presented, FreeMonoidExceedsBound) {
  Presentation p;
  p.objects = 1;
  p.add_generator(0, 0);
  EXPECT_THROW(materialize_category(p, 50), BoundExceeded);
}

TEST(Presented, IdempotentAndCommutingSquare) {
  Presentation p;
  p.objects = 1;
  const int e = p.add_generator(0, 0);
  p.relate(0, {e, e}, {e});
  EXPECT_EQ(materialize_category(p, 10).category.morphism_count(), 2);

  Presentation sq;
  sq.objects = 4;
  const int a = sq.add_generator(0, 1), b = sq.add_generator(1, 3);
  const int c = sq.add_generator(0, 2), d = sq.add_generator(2, 3);
  sq.relate(0, {a, b}, {c, d});
  const auto m = materialize_category(sq, 100);
  EXPECT_EQ(m.category.morphism_count(), 9);
  EXPECT_EQ(m.evaluate(0, {a, b}), m.evaluate(0, {c, d}));
}

TEST(Presented, GroupoidWordsEvaluateBack) {
  Presentation p;
  p.objects = 2;
  const int f = p.add_generator(0, 1), g = p.add_generator(0, 1);
  p.relate(0, {f, -g - 1, f, -g - 1}, {});
  const auto m = materialize_groupoid(p, 100);
  EXPECT_EQ(m.category.morphism_count(), 8);
  EXPECT_TRUE(m.category.validate().empty());
  for (int k = 0; k < m.category.morphism_count(); ++k)
    EXPECT_EQ(m.evaluate(m.category.source(k), m.words[k]), k);
}

TEST(FundamentalGroupoid, Simplices) {
  EXPECT_EQ(fundamental_groupoid(delta(2, 2)).category.morphism_count(), 9);
  EXPECT_EQ(fundamental_groupoid(delta(0, 2)).category.morphism_count(), 1);
  EXPECT_EQ(fundamental_groupoid(two_point(2)).category.morphism_count(), 2);
  EXPECT_THROW(fundamental_groupoid(boundary(2, 2), 64), BoundExceeded);
  EXPECT_THROW(fundamental_groupoid(sphere(1, 2), 64), BoundExceeded);
}

TEST(FundamentalGroupoid, RecoversGroupFromNerve) {
  for (int n : {1, 2, 3, 4}) {
    const auto pi = fundamental_groupoid(nerve(cyclic_group(n), 2));
    EXPECT_TRUE(isomorphic(pi.category, cyclic_group(n)));
  }
  const auto pi = fundamental_groupoid(nerve(chaotic_category(3), 2));
  EXPECT_TRUE(isomorphic(pi.category, chaotic_category(3)));
}

TEST(FundamentalGroupoid, MapsAreFunctors) {
  auto x = share(nerve(cyclic_group(4), 2));
  auto y = share(nerve(cyclic_group(2), 2));
  auto f = share(cyclic_group(4));
  auto g = share(cyclic_group(2));
  Functor q{f, g, {{0}, {0, 1, 0, 1}}};
  ASSERT_TRUE(q.audit().empty());
  const SimplicialMap nq = nerve_map(q, x, y);
  const auto px = fundamental_groupoid(*x), py = fundamental_groupoid(*y);
  const FunctorMap m = fundamental_groupoid_map(nq, px, py);
  EXPECT_TRUE(audit_functor(px.category, py.category, m).empty());
  std::set<int> image(m.morphisms.begin(), m.morphisms.end());
  EXPECT_EQ(image.size(), 2u);
}

TEST(Colimit, CoproductAndPushouts) {
  CatDiagram d;
  d.objects = {share(cyclic_group(2)), share(discrete_category(1))};
  EXPECT_EQ(colimit_cat(d).apex.morphism_count(), 3);

  // Gluing Z/2 onto one end of an isomorphism.
  auto a = share(terminal_category());
  auto b = share(chaotic_category(2));
  auto c = share(cyclic_group(2));
  const auto po = pushout_cat(a, b, c, {{0}, {0}}, {{0}, {0}});
  EXPECT_EQ(po.apex.object_count(), 2);
  EXPECT_EQ(po.apex.morphism_count(), 8);
  EXPECT_TRUE(po.apex.validate().empty());
  EXPECT_TRUE(po.apex.is_groupoid());
  EXPECT_TRUE(audit_functor(*b, po.apex, po.legs[0]).empty());
  EXPECT_TRUE(audit_functor(*c, po.apex, po.legs[1]).empty());

  // Amalgamating two copies of Z/2 along the trivial group gives the infinite dihedral group.
  EXPECT_THROW(pushout_cat(a, c, c, {{0}, {0}}, {{0}, {0}}, 200), BoundExceeded);

  // Z/4 with its subgroup Z/2 collapsed gives Z/2.
  auto z4 = share(cyclic_group(4));
  const auto quotient = pushout_cat(c, z4, a, {{0}, {0, 2}}, {{0}, {0, 0}});
  EXPECT_TRUE(isomorphic(quotient.apex, cyclic_group(2)));
}

TEST(Colimit, GluedArrowsCompose) {
  auto a = share(terminal_category());
  auto o = share(ordinal_category(1));
  // 0 -> 1 glued to 0' -> 1' at 1 = 0'.
  const auto po = pushout_cat(a, o, o, {{1}, {2}}, {{0}, {0}});
  EXPECT_EQ(po.apex.object_count(), 3);
  EXPECT_TRUE(isomorphic(po.apex, ordinal_category(2)));
}

TEST(Colimit, NervesOfPushoutAlongFullyFaithfulInclusion) {
  auto a = share(terminal_category());
  auto b = share(chaotic_category(2));
  auto c = share(cyclic_group(3));
  const auto po = pushout_cat(a, b, c, {{0}, {0}}, {{0}, {0}});
  const auto h = homology_up_to(nerve_iso(po.apex, 3), 2);
  EXPECT_EQ(h[1], AbelianGroupDescriptor::cyclic(3));
}
