#include <gtest/gtest.h>

#include <random>

#include "cubic_mw/composition.hpp"
#include "cubic_mw/detail/small_compose.hpp"
#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/registry.hpp"
#include "oracles.hpp"

using namespace cubic_mw;

namespace {

const SurfaceRegistry& reg() {
  static const SurfaceRegistry r = SurfaceRegistry::builtin();
  return r;
}

BigInt plane_value(const DiagonalSurface& s, const ProjPoint& p, const ProjPoint& q) {
  BigInt v = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    v += BigInt(static_cast<long>(s.coefficient(i))) * p[i] * p[i] * q[i];
  }
  return v;
}

}  // namespace

TEST(Compose, WorkedExample) {
  const auto& s = reg().at("2");
  const ProjPoint p = canonicalize(0, 1, 1, -1);
  const ProjPoint q = canonicalize(1, 1, -1, 0);
  const AlphaBeta ab = alpha_beta(s, p, q);
  // alpha = 2*1*1 + 3*1*1, beta = 2*1*1 + 3*1*(-1)
  EXPECT_EQ(ab.alpha, 5);
  EXPECT_EQ(ab.beta, -1);
  const auto r = compose(s, p, q);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.point().to_string(), "(1:6:4:-5)");
  EXPECT_TRUE(is_on_surface(s, r.point()));
}

TEST(Compose, Failures) {
  const auto& s10 = reg().at("10");
  const ProjPoint p = canonicalize(1, -1, 0, 0);
  EXPECT_EQ(compose(s10, p, p).failure(), CompositionFailure::CoincidentPoints);
  // Both points on the line (x:-x:z:-z), which lies in x^3+y^3+2z^3+2u^3 = 0.
  EXPECT_EQ(compose(s10, p, canonicalize(0, 0, 1, -1)).failure(),
            CompositionFailure::LineOnSurface);
  EXPECT_EQ(to_string(CompositionFailure::LineOnSurface), "LineOnSurface");
}

TEST(Compose, MatchesInterpolationOracle) {
  std::mt19937_64 rng(3);
  for (const auto& e : reg().entries()) {
    const auto pts = enumerate_points(e.surface, 40);
    ASSERT_GE(pts.size(), 2u) << e.label;
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int t = 0; t < 300; ++t) {
      const ProjPoint& p = pts[pick(rng)];
      const ProjPoint& q = pts[pick(rng)];
      std::array<BigInt, 4> expect;
      const bool defined = oracle::secant_by_interpolation(e.surface, p, q, expect);
      const auto got = compose(e.surface, p, q);
      ASSERT_EQ(got.ok(), defined) << e.label << ' ' << p << ' ' << q;
      if (defined) EXPECT_EQ(got.point(), canonicalize(expect)) << e.label << ' ' << p << ' ' << q;
    }
  }
}

TEST(Compose, TangentLineReturnsTheTangencyPoint) {
  // q in the tangent plane at p: the line pq touches the surface twice at p.
  const auto& s = reg().at("1");
  const auto pts = enumerate_points(s, 60);
  int seen = 0;
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      if (p == q || plane_value(s, p, q) != 0) continue;
      const auto r = compose(s, p, q);
      if (!r.ok()) continue;
      EXPECT_EQ(r.point(), p);
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(TangentPlane, Gradient) {
  const TangentPlane t1 = tangent_plane(reg().at("1"), canonicalize(1, 2, 3, 4));
  EXPECT_EQ(t1.coeffs[0], 1);
  EXPECT_EQ(t1.coeffs[1], 8);
  EXPECT_EQ(t1.coeffs[2], 27);
  EXPECT_EQ(t1.coeffs[3], 64);
  // Gradient (0, 8, 27, 125) on 1,2,3,5 is already primitive.
  const TangentPlane t2 = tangent_plane(reg().at("2"), canonicalize(0, 2, 3, 5));
  EXPECT_EQ(t2.coeffs[1], 8);
  EXPECT_EQ(t2.coeffs[3], 125);
  // Common factor removed: on 4,4,6,6 the gradient (4,4,6,6) reduces to (2,2,3,3).
  const TangentPlane t3 = tangent_plane(DiagonalSurface(4, 4, 6, 6), canonicalize(1, -1, 1, 1));
  EXPECT_EQ(t3.coeffs[0], 2);
  EXPECT_EQ(t3.coeffs[2], 3);
}

TEST(TangentPlane, SectionPointsMatchDirectTest) {
  const auto& s = reg().at("2");
  const auto pts = enumerate_points(s, 30);
  for (std::size_t i = 0; i < std::min<std::size_t>(pts.size(), 25); ++i) {
    const auto found = tangent_section_points(s, pts[i], pts);
    std::vector<ProjPoint> expect;
    for (const auto& q : pts) {
      if (q != pts[i] && plane_value(s, pts[i], q) == 0) expect.push_back(q);
    }
    EXPECT_EQ(found, expect) << pts[i];
    EXPECT_TRUE(tangent_plane(s, pts[i]).contains(pts[i]));
  }
}

TEST(TangentPlane, WorkedExampleOnFirstSurface) {
  // (1:-1:-1:1) on 1,2,3,4 has tangent plane x + 2y + 3z + 4u = 0, which
  // holds the points of index 1, 2 and 4; (2:0:-1:-1) is off the plane.
  const auto& s = reg().at("1");
  const ProjPoint p = canonicalize(1, -1, -1, 1);
  const std::vector<ProjPoint> cand{canonicalize(1, 0, 1, -1), canonicalize(1, 1, -1, 0), p,
                                    canonicalize(3, 1, 1, -2), canonicalize(2, 0, -1, -1)};
  const auto found = tangent_section_points(s, p, cand);
  ASSERT_EQ(found.size(), 3u);
  EXPECT_EQ(found[0], cand[0]);
  EXPECT_EQ(found[1], cand[1]);
  EXPECT_EQ(found[2], cand[3]);
  EXPECT_EQ(compose(s, p, cand[1]).point(), p);
}

TEST(ComposeSmall, AgreesWithArbitraryPrecision) {
  std::mt19937_64 rng(5);
  for (const char* label : {"1", "3", "8", "12"}) {
    const auto& s = reg().at(label);
    const auto pts = enumerate_small(s, HeightBound::sum(label == std::string("3") ? 4000 : 1500));
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int t = 0; t < 3000; ++t) {
      const SmallPoint& a = pts[pick(rng)];
      const SmallPoint& b = pts[pick(rng)];
      const auto fast = detail::compose_small(s, a, a.h_max(), b, b.h_max());
      const auto slow = compose(s, ProjPoint::from_small(a), ProjPoint::from_small(b));
      switch (fast.status) {
        case detail::SmallStatus::Ok:
          ASSERT_TRUE(slow.ok());
          EXPECT_EQ(ProjPoint::from_small(fast.point), slow.point());
          break;
        case detail::SmallStatus::Coincident:
          EXPECT_EQ(slow.failure(), CompositionFailure::CoincidentPoints);
          break;
        case detail::SmallStatus::LineOnSurface:
          EXPECT_EQ(slow.failure(), CompositionFailure::LineOnSurface);
          break;
        case detail::SmallStatus::Unrepresentable:
          ASSERT_TRUE(slow.ok());
          EXPECT_FALSE(slow.point().to_small().has_value());
          break;
      }
    }
  }
}

TEST(ComposeSmall, GcdMatchesStd) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5000; ++t) {
    const std::uint64_t a = rng() >> (rng() % 64), b = rng() >> (rng() % 64);
    EXPECT_EQ(detail::gcd_u64(a, b), std::gcd(a, b));
  }
  EXPECT_EQ(detail::gcd_u64(0, 0), 0u);
  EXPECT_EQ(detail::gcd_u64(0, 12), 12u);
}
