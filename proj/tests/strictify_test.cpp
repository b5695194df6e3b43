#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace diagram_forge;

TEST(Strictify, IotaExtensionsOfE) {
  auto c     = build(example_e_spec());
  auto y     = c.object_named("y");
  auto plain = extend_with_iota(c, IotaVariant::plain);
  EXPECT_EQ(plain.category.object_count(), 4u);
  EXPECT_EQ(plain.category.morphism_count(), 8u);
  EXPECT_EQ(plain.category.degree(plain.iota), 3u);
  auto arrow = extend_with_iota(c, IotaVariant::arrow, y);
  // ι→y, u∘ι, v∘ι
  EXPECT_EQ(arrow.via.size(), 3u);
  EXPECT_TRUE(arrow.category.find_morphism("ι→y"));
  EXPECT_TRUE(arrow.category.find_morphism("u∘ι"));
  EXPECT_TRUE(is_inverse(arrow.category));
  auto dashed = extend_with_iota(c, IotaVariant::dashed, y);
  EXPECT_EQ(dashed.via.size(), 2u);
  EXPECT_THROW(extend_with_iota(c, IotaVariant::arrow), UnknownObject);
  EXPECT_THROW(extend_with_iota(c, IotaVariant::dashed, 7), UnknownObject);
}

TEST(Strictify, PlanForE) {
  auto c    = build(example_e_spec());
  auto plan = strict_components(c);
  std::size_t const expected_new[]      = {1, 3, 5};
  std::size_t const expected_matching[] = {0, 2, 4};
  for (char const* name : {"x", "y", "z"}) {
    auto i = c.object_named(name);
    EXPECT_EQ(plan.objects[i].new_components.size(), expected_new[i]) << name;
    EXPECT_EQ(plan.objects[i].matching_components.size(), expected_matching[i]) << name;
  }
  EXPECT_TRUE(verify_matching_claim(c).ok());
}

TEST(Strictify, ConservationLaws) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto c     = df_test::random_inverse_category(rng);
    auto plan  = strict_components(c);
    auto whole = positive_nerve_elements(c).size();
    std::size_t total_new = 0;
    for (ObjectId i = 0; i < c.object_count(); ++i) {
      auto const& p = plan.objects[i];
      total_new += p.new_components.size();
      ASSERT_EQ(p.nerve.size(), whole + 1 + p.new_components.size() + p.matching_components.size());
    }
    ASSERT_EQ(total_new, whole);
  }
}

TEST(Strictify, MatchingClaimOnRandomCategories) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = df_test::random_inverse_category(rng);
    ASSERT_TRUE(verify_matching_claim(c).ok()) << verify_matching_claim(c);
  }
}

TEST(Strictify, NonInverseRejected) {
  CategorySpec s;
  s.objects    = {{"x", 0}, {"y", 1}};
  s.generators = {{"f", "x", "y"}};
  EXPECT_THROW(strict_components(build(s)), NotInverse);
}

TEST(Strictify, SpSchema) {
  auto s = sp_schema(2);
  EXPECT_EQ(s.names(), (std::vector<std::string>{"A_0", "A_1", "A_2", "f_0", "f_1"}));
  EXPECT_TRUE(check_well_formed(s).ok());
}

TEST(Strictify, FibrantReplacement) {
  ContextSchema m;
  m.add("x_1", Ref{"X"});
  m.add("x_2", Ref{"X"});
  auto g = fibrant_replacement_schema("Y", m, {"u", "v"});
  EXPECT_EQ(g.names(), (std::vector<std::string>{"x_1", "x_2", "a", "δ_u", "δ_v"}));
  EXPECT_EQ(g.metadata.at("unit"), "a ↦ ((u(a), v(a)), a, refl)");
  EXPECT_TRUE(check_well_formed(g, {"X", "Y", "u", "v"}).ok());
  EXPECT_THROW(fibrant_replacement_schema("Y", m, {"u"}), SpecError);
}
