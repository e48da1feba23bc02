#include <gtest/gtest.h>

#include <sstream>

#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/errors.hpp"
#include "cubic_mw/registry.hpp"

using namespace cubic_mw;

TEST(Registry, BuiltinSurfaces) {
  const auto reg = SurfaceRegistry::builtin();
  ASSERT_EQ(reg.size(), 13u);
  EXPECT_EQ(reg.at("1"), DiagonalSurface(1, 2, 3, 4, 1));
  EXPECT_EQ(reg.at("3"), DiagonalSurface(17, 18, 19, 20, 1));
  EXPECT_EQ(reg.at("7").picard_rank(), 2);
  EXPECT_EQ(reg.at("13"), DiagonalSurface(2, 2, 3, 3, 3));
  EXPECT_THROW(reg.at("14"), PreconditionError);
}

TEST(Registry, RoundTripsThroughText) {
  const auto reg = SurfaceRegistry::builtin();
  std::stringstream text;
  reg.write(text);
  const auto back = SurfaceRegistry::parse(text);
  ASSERT_EQ(back.size(), reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    EXPECT_EQ(back.entries()[i].label, reg.entries()[i].label);
    EXPECT_EQ(back.entries()[i].surface, reg.entries()[i].surface);
  }
}

TEST(Registry, ParseCommentsAndErrors) {
  std::istringstream ok("# header\n\nfoo 1 2 3 4 1  # trailing comment\n");
  const auto reg = SurfaceRegistry::parse(ok);
  ASSERT_EQ(reg.size(), 1u);
  EXPECT_EQ(reg.at("foo"), DiagonalSurface(1, 2, 3, 4, 1));

  std::istringstream dup("a 1 2 3 4 1\na 1 2 3 5 1\n");
  EXPECT_THROW(SurfaceRegistry::parse(dup), PreconditionError);
  std::istringstream short_line("a 1 2 3\n");
  EXPECT_THROW(SurfaceRegistry::parse(short_line), PreconditionError);
  std::istringstream zero("a 1 0 3 4 1\n");
  EXPECT_THROW(SurfaceRegistry::parse(zero), PreconditionError);
  EXPECT_THROW(SurfaceRegistry::load("/nonexistent/registry.txt"), IoError);
}

TEST(Registry, FindByCoefficients) {
  const auto reg = SurfaceRegistry::builtin();
  const auto* e = reg.find_by_coefficients({1, 1, 2, 2});
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->label, "10");
  EXPECT_EQ(reg.find_by_coefficients({1, 2, 3, 6}), nullptr);
}

TEST(Policy, KeepListMustBeOnTrivialLine) {
  EXPECT_THROW(ExclusionPolicy::exclude_trivial_lines({canonicalize(1, 1, 1, 1)}),
               PreconditionError);
}

TEST(Policy, Admits) {
  const auto p = ExclusionPolicy::exclude_trivial_lines({canonicalize(1, -1, 0, 0)});
  EXPECT_TRUE(p.admits(canonicalize(1, -1, 0, 0)));
  EXPECT_FALSE(p.admits(canonicalize(0, 0, 1, -1)));
  EXPECT_TRUE(p.admits(canonicalize(1, 1, 1, -1)));
  EXPECT_TRUE(ExclusionPolicy{}.admits(canonicalize(0, 0, 1, -1)));
}

TEST(Policy, BuiltinKeepLists) {
  EXPECT_FALSE(builtin_policy("1").excludes_trivial_lines());
  EXPECT_EQ(builtin_policy("8").keep_list().size(), 1u);
  EXPECT_EQ(builtin_policy("12").keep_list().size(), 4u);
  EXPECT_TRUE(counting_policy("12").excludes_trivial_lines());
  EXPECT_TRUE(counting_policy("12").keep_list().empty());
  EXPECT_FALSE(counting_policy("6").excludes_trivial_lines());
}

TEST(Policy, KeepListsAddTheirPointsToCounts) {
  const auto reg = SurfaceRegistry::builtin();
  // The kept points have h_max 1, so each one adds exactly one to every count.
  EXPECT_EQ(count_points(reg.at("7"), 100, counting_policy("7")), 196u);
  EXPECT_EQ(count_points(reg.at("7"), 100, builtin_policy("7")), 197u);
  EXPECT_EQ(count_points(reg.at("10"), 100, counting_policy("10")), 666u);
  EXPECT_EQ(count_points(reg.at("10"), 100, builtin_policy("10")), 670u);
}
