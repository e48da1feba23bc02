#include <gtest/gtest.h>

#include <algorithm>

#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/errors.hpp"
#include "cubic_mw/registry.hpp"
#include "oracles.hpp"

using namespace cubic_mw;

namespace {

std::set<std::array<std::int64_t, 4>> as_set(const std::vector<SmallPoint>& pts) {
  std::set<std::array<std::int64_t, 4>> s;
  for (const auto& p : pts) s.insert(p.c);
  return s;
}

}  // namespace

class EnumerationVsBruteForce : public ::testing::TestWithParam<std::string> {};

TEST_P(EnumerationVsBruteForce, MaxBox) {
  const auto s = SurfaceRegistry::builtin().at(GetParam());
  for (std::int64_t h : {1, 2, 7, 30}) {
    const auto got = enumerate_small(s, HeightBound::max(h));
    EXPECT_EQ(as_set(got), oracle::brute_force(s, h)) << "H=" << h;
    EXPECT_EQ(got.size(), as_set(got).size()) << "duplicates at H=" << h;
  }
}

TEST_P(EnumerationVsBruteForce, SumDiamond) {
  const auto s = SurfaceRegistry::builtin().at(GetParam());
  const std::int64_t b = 40;
  auto expect = oracle::brute_force(s, b);
  std::erase_if(expect, [&](const auto& p) {
    return std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2]) + std::abs(p[3]) > b;
  });
  EXPECT_EQ(as_set(enumerate_small(s, HeightBound::sum(b))), expect);
}

INSTANTIATE_TEST_SUITE_P(AllSurfaces, EnumerationVsBruteForce,
                         ::testing::Values("1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11",
                                           "12", "13"));

TEST(Enumeration, SortedCanonicalAndOnSurface) {
  const auto s = SurfaceRegistry::builtin().at("2");
  const auto pts = enumerate_points(s, 50);
  ASSERT_FALSE(pts.empty());
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  for (const auto& p : pts) {
    EXPECT_TRUE(is_on_surface(s, p));
    EXPECT_EQ(canonicalize(p.coords()), p);
  }
}

TEST(Enumeration, NegativeCoefficients) {
  const DiagonalSurface s(1, -2, 3, -4);
  EXPECT_EQ(as_set(enumerate_small(s, HeightBound::max(25))), oracle::brute_force(s, 25));
}

TEST(Enumeration, Preconditions) {
  const auto s = SurfaceRegistry::builtin().at("1");
  EXPECT_THROW(enumerate_points(s, 0), PreconditionError);
  EXPECT_THROW(enumerate_small(s, HeightBound::sum(-3)), PreconditionError);
  EXPECT_THROW(enumerate_points(s, std::int64_t{1} << 40), PreconditionError);
}

TEST(Enumeration, CountsForFirstSurface) {
  const auto s = SurfaceRegistry::builtin().at("1");
  EXPECT_EQ(count_points(s, 100), 77u);
  EXPECT_EQ(count_points(s, 200), 163u);
}
