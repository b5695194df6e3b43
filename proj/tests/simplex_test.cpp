#include <gtest/gtest.h>

#include "support.hpp"

using namespace diagram_forge;

TEST(Simplex, MapBasics) {
  SimplexMap f(2, {0, 0, 2});
  EXPECT_EQ(f.domain(), 2u);
  EXPECT_EQ(f.codomain(), 2u);
  EXPECT_EQ(f.str(), "(0,0,2)");
  EXPECT_FALSE(f.injective());
  EXPECT_FALSE(f.surjective());
  EXPECT_TRUE(SimplexMap(1, {0, 1, 1}).surjective());
  EXPECT_TRUE(SimplexMap::identity(3).is_identity());
  EXPECT_THROW(SimplexMap(1, {1, 0}), SpecError);
  EXPECT_THROW(SimplexMap(1, {0, 2}), SpecError);
  EXPECT_THROW(SimplexMap(1, {}), SpecError);
}

TEST(Simplex, MonotoneCountsAreBinomial) {
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      auto maps = monotone_maps(m, n);
      EXPECT_EQ(maps.size(), binomial(m + n + 1, m + 1)) << m << "," << n;
      EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
      EXPECT_EQ(std::adjacent_find(maps.begin(), maps.end()), maps.end());
      EXPECT_EQ(injective_maps(m, n).size(), binomial(n + 1, m + 1));
      EXPECT_EQ(surjective_maps(m, n).size(), m >= n ? binomial(m, n) : 0u);
    }
  }
}

TEST(Simplex, CompositionIsAssociative) {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      for (std::size_t c = 0; c <= 2; ++c) {
        for (auto const& f : monotone_maps(a, b)) {
          for (auto const& g : monotone_maps(b, c)) {
            for (auto const& h : monotone_maps(c, 2)) {
              ASSERT_EQ(compose_simplex(h, compose_simplex(g, f)), compose_simplex(compose_simplex(h, g), f));
            }
          }
        }
      }
    }
  }
}

TEST(Simplex, EpiMonoFactorizationExistsAndIsUnique) {
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (auto const& f : monotone_maps(m, n)) {
        auto em = epi_mono_factor(f);
        ASSERT_TRUE(em.surjection.surjective());
        ASSERT_TRUE(em.injection.injective());
        ASSERT_EQ(compose_simplex(em.injection, em.surjection), f);
        std::size_t found = 0;
        for (std::size_t k = 0; k <= std::min(m, n); ++k) {
          for (auto const& s : surjective_maps(m, k)) {
            for (auto const& i : injective_maps(k, n)) {
              found += compose_simplex(i, s) == f;
            }
          }
        }
        ASSERT_EQ(found, 1u) << f.str();
      }
    }
  }
}

TEST(Simplex, DeltaCategoryShape) {
  auto d = delta_category(2);
  EXPECT_EQ(d.category.object_count(), 3u);
  EXPECT_EQ(d.category.morphism_count(), 31u);
  EXPECT_EQ(d.category.object(2).name, "[2]");
  EXPECT_EQ(d.category.degree(2), 2u);
  auto f = d.morphism_of(SimplexMap(2, {0, 2}));
  EXPECT_EQ(d.category.morphism(f).label, "(0,2)→[2]");
  EXPECT_THROW(d.morphism_of(SimplexMap(3, {0, 3})), SpecError);
  EXPECT_EQ(delta_category(2, DeltaPart::injective).category.morphism_count(), 11u);
  EXPECT_EQ(delta_category(2, DeltaPart::surjective).category.morphism_count(), 7u);
}

TEST(Simplex, SemisimplicialIndexIsInverse) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto d = semisimplicial_index(n);
    EXPECT_TRUE(check_inverse(d.category).ok());
    // the matching object at [k] has 2^{k+1} - 2 entries
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(matching_index(d.category, k).entries.size(), (std::size_t{1} << (k + 1)) - 2);
    }
  }
}
