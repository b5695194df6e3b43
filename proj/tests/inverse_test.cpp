#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace diagram_forge;

TEST(Inverse, ExampleEIsInverse) {
  auto c = build(example_e_spec());
  EXPECT_TRUE(check_inverse(c).ok());
  EXPECT_NO_THROW(require_inverse(c, "test"));
}

TEST(Inverse, DegreeRaisingArrowIsLocated) {
  CategorySpec s;
  s.objects    = {{"x", 0}, {"y", 1}};
  s.generators = {{"f", "x", "y"}};
  auto r = check_inverse(build(s));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.violations[0].check, "degree");
  EXPECT_TRUE(r.mentions("f"));
  EXPECT_THROW(require_inverse(build(s), "test"), NotInverse);
}

TEST(Inverse, SynthesizedDegreesRepairABadMap) {
  CategorySpec s;
  s.objects    = {{"x", 0}, {"y", 0}};
  s.generators = {{"f", "y", "x"}};
  auto c = build(s);
  EXPECT_FALSE(is_inverse(c));
  EXPECT_TRUE(is_inverse(c.with_degrees(synthesize_degrees(c))));
}

TEST(Inverse, CosliceOfEAtZ) {
  auto c = build(example_e_spec());
  auto k = coslice(c, c.object_named("z"));
  ASSERT_EQ(k.entries.size(), 2u);
  // target degree ascending: u∘w into x first, then w into y
  EXPECT_EQ(c.object(k.entries[0].target).name, "x");
  EXPECT_EQ(c.morphism(k.entries[0].arrow).label, "u∘w");
  EXPECT_EQ(c.object(k.entries[1].target).name, "y");
  // coslice morphisms: w -> u∘w via u and via v
  EXPECT_EQ(k.category.morphism_count(), 4u);
  EXPECT_EQ(k.category.hom(1, 0).size(), 2u);
  EXPECT_TRUE(is_inverse(k.category));
  for (MorphismId h = 0; h < k.category.morphism_count(); ++h) {
    auto const& m = k.category.morphism(h);
    auto base     = k.forgetful_morphism[h];
    EXPECT_EQ(c.compose(base, k.entries[m.source].arrow), k.entries[m.target].arrow);
  }
}

TEST(Inverse, CoslicesOfRandomInverseCategoriesAreInverse) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = df_test::random_inverse_category(rng);
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      auto k = coslice(c, x);
      std::size_t expected = 0;
      for (MorphismId f : c.out(x)) {
        expected += !c.is_identity(f);
      }
      ASSERT_EQ(k.entries.size(), expected);
      ASSERT_TRUE(is_inverse(k.category));
    }
  }
}

TEST(Inverse, DownwardClosure) {
  auto c = build(example_e_spec());
  auto d = downward_closed(c, {c.object_named("y")});
  EXPECT_EQ(d.objects, (std::vector<ObjectId>{c.object_named("x"), c.object_named("y")}));
  EXPECT_TRUE(is_downward_closed(c, d.objects));
  EXPECT_FALSE(is_downward_closed(c, {c.object_named("z")}));
  EXPECT_THROW(downward_closed(c, {99}), UnknownObject);
}

TEST(Inverse, MatchingIndexSizes) {
  auto c = build(example_e_spec());
  EXPECT_EQ(matching_index(c, c.object_named("x")).entries.size(), 0u);
  EXPECT_EQ(matching_index(c, c.object_named("y")).entries.size(), 2u);
  EXPECT_EQ(matching_index(c, c.object_named("z")).entries.size(), 2u);
}
