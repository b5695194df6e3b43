#include <gtest/gtest.h>

#include "support.hpp"

using namespace diagram_forge;

namespace {

  Binding bind(std::string n, TypeExpr t) {
    return {std::move(n), std::move(t)};
  }

  // Example 2.4 with the paper's own binder names (a, b, l).
  ContextSchema paper_reedy_e() {
    ContextSchema s;
    s.add("R_x", Universe{});
    s.add("R_y", fun(SigmaTel{{bind("a", Ref{"R_x"}), bind("b", Ref{"R_x"})}}, Universe{}));
    s.add("R_z", fun(SigmaTel{{bind("a", Ref{"R_x"}), bind("l", FamilyApp{"R_y", {"a", "a"}})}}, Universe{}));
    return s;
  }

  std::vector<std::string> ambient_of(ContextSchema const& s) {
    return s.names();
  }

}  // namespace

TEST(Schema, AddRejectsDuplicates) {
  ContextSchema s;
  s.add("A", Universe{});
  EXPECT_THROW(s.add("A", Universe{}), NameCollision);
}

TEST(Schema, WellFormednessLocatesScopeErrors) {
  ContextSchema s;
  s.add("f", fun(Ref{"A"}, Ref{"A"}));
  s.add("A", Universe{});
  auto r = check_well_formed(s);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r.violations[0].check, "scope");
  EXPECT_EQ(r.violations[0].where, "f");
  EXPECT_TRUE(check_well_formed(s, {"A"}).ok());
  ContextSchema dup;
  dup.components = {{"A", Universe{}, ""}, {"A", Universe{}, ""}};
  EXPECT_EQ(check_well_formed(dup).violations[0].check, "name");
}

TEST(Schema, TelescopeBindersScopeOverCodomainOnly) {
  ContextSchema s;
  s.add("R", Universe{});
  s.add("F", fun(SigmaTel{{bind("a", Ref{"R"})}}, fun(Ref{"a"}, Universe{})));
  EXPECT_TRUE(check_well_formed(s).ok());
  s.add("G", Ref{"a"});
  EXPECT_FALSE(check_well_formed(s).ok());
}

TEST(Schema, AlphaEquivalence) {
  auto e = reedy_diagram_type(build(example_e_spec()));
  EXPECT_TRUE(alpha_equivalent(e, paper_reedy_e()));
  auto broken = paper_reedy_e();
  broken.components[2].type = fun(SigmaTel{{bind("a", Ref{"R_x"}), bind("l", FamilyApp{"R_y", {"a", "b"}})}},
                                  Universe{});
  EXPECT_FALSE(alpha_equivalent(e, broken));
}

TEST(Emit, ReedyTypeOfE) {
  auto s = reedy_diagram_type(build(example_e_spec()));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.names(), (std::vector<std::string>{"R_x", "R_y", "R_z"}));
  EXPECT_TRUE(s.components[0].type.is<Universe>());
  EXPECT_EQ(s.components[1].type.as<FunType>().domain->as<SigmaTel>().bindings.size(), 2u);
  EXPECT_TRUE(check_well_formed(s).ok());
}

TEST(Emit, WeakTypeOfE) {
  auto s = weak_diagram_type(build(example_e_spec()));
  ASSERT_EQ(s.size(), 9u);
  std::size_t universes = 0, functions = 0, equalities = 0;
  for (auto const& c : s.components) {
    universes += c.type.is<Universe>();
    functions += c.type.is<FunType>();
    equalities += c.type.is<EqType>();
  }
  EXPECT_EQ(universes, 3u);
  EXPECT_EQ(functions, 4u);
  EXPECT_EQ(equalities, 2u);
  EXPECT_TRUE(check_well_formed(s).ok());
  auto const& p = s.find("c2_w_u")->type.as<EqType>();
  EXPECT_EQ(p.lhs, PathExpr::named("u∘w"));
  EXPECT_EQ(p.rhs, PathExpr::compose({PathExpr::named("u"), PathExpr::named("w")}));
}

TEST(Emit, SemisimplicialBoundarySizes) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto s = semisimplicial_type(n);
    ASSERT_EQ(s.size(), n + 1);
    EXPECT_TRUE(check_well_formed(s).ok());
    for (std::size_t k = 0; k <= n; ++k) {
      auto const& t = s.components[k].type;
      std::size_t boundary = t.is<Universe>() ? 0 : t.as<FunType>().domain->as<SigmaTel>().bindings.size();
      EXPECT_EQ(boundary, (std::size_t{1} << (k + 1)) - 2) << n << "," << k;
    }
  }
}

TEST(Emit, SemisimplicialAgreesWithReedyOverIndex) {
  for (std::size_t n = 0; n <= 3; ++n) {
    EXPECT_TRUE(alpha_equivalent(semisimplicial_type(n),
                                 reedy_diagram_type(semisimplicial_index(n).category, "A_")))
        << n;
  }
}

TEST(Emit, SimplicialTypeLevelTwo) {
  auto s = simplicial_type(2);
  std::size_t families = 0, equivs = 0;
  for (auto const& c : s.components) {
    equivs += c.type.is<IsEquiv>();
    families += !c.type.is<IsEquiv>();
  }
  EXPECT_EQ(families, 7u);
  EXPECT_EQ(equivs, 4u);
  EXPECT_TRUE(check_well_formed(s).ok());
  auto const* e = s.find("marked_(1)→(2)");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->type.as<IsEquiv>().subject, "A_(2)");
  EXPECT_EQ(e->type.as<IsEquiv>().projection_target, "A_(1)");
}

TEST(Emit, GeneralTerminalTruncated) {
  auto s = general_hc_type(build(terminal_spec()), 2, std::string("h"));
  EXPECT_EQ(s.names(), (std::vector<std::string>{"h_0", "h_1", "h_2", "equiv_h_1"}));
  EXPECT_EQ(s.metadata.at("truncated"), "2");
  EXPECT_EQ(s.find("equiv_h_1")->type.as<IsEquiv>().subject, "h_1");
  EXPECT_TRUE(check_well_formed(s).ok());
  auto deeper = general_hc_type(build(terminal_spec()), 4, std::string("h"));
  EXPECT_EQ(deeper.size(), 6u);
  EXPECT_TRUE(deeper.find("h_3")->type.is<OpaqueT>());
  EXPECT_EQ(deeper.find("h_4")->type.as<OpaqueT>().boundary.size(), 30u);
}

TEST(Emit, StrictFibersOfE) {
  auto c      = build(example_e_spec());
  auto weak   = weak_diagram_type(c);
  auto fibers = strict_fiber_schemas(c, weak);
  ASSERT_EQ(fibers.size(), 3u);
  std::size_t const total[] = {1, 5, 9};
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(fibers[k].size(), total[k]);
    EXPECT_TRUE(check_well_formed(fibers[k], ambient_of(weak)).ok()) << check_well_formed(fibers[k], ambient_of(weak));
  }
  EXPECT_EQ(fibers[2].metadata.at("matching"), "4");
  EXPECT_EQ(fibers[2].names(), (std::vector<std::string>{"x", "y", "δ_u", "δ_v", "z", "δ_w", "δ_u∘w", "Θ_w_u",
                                                         "Θ_w_v"}));
}
