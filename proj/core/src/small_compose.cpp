#include "cubic_mw/detail/small_compose.hpp"

#include <bit>
#include <cstdlib>
#include <limits>

#include "cubic_mw/composition.hpp"

namespace cubic_mw::detail {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

u128 abs_u128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

SmallOutcome via_bigint(const DiagonalSurface& s, const SmallPoint& a1, const SmallPoint& a2) {
  auto outcome = compose(s, ProjPoint::from_small(a1), ProjPoint::from_small(a2));
  if (!outcome) {
    return {outcome.failure() == CompositionFailure::CoincidentPoints ? SmallStatus::Coincident
                                                                      : SmallStatus::LineOnSurface,
            {}};
  }
  if (auto p = outcome.point().to_small()) return {SmallStatus::Ok, *p};
  return {SmallStatus::Unrepresentable, {}};
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = std::countr_zero(a | b);
  a >>= std::countr_zero(a);
  do {
    b >>= std::countr_zero(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

SmallOutcome compose_small(const DiagonalSurface& s, const SmallPoint& a1, std::int64_t h1,
                           const SmallPoint& a2, std::int64_t h2) {
  if (a1 == a2) return {SmallStatus::Coincident, {}};

  // |alpha| <= 4K h1 h2^2 and |beta| <= 4K h1^2 h2 must fit in int64; the
  // minors below need h < 2^31.
  constexpr std::int64_t kMaxH = std::int64_t{1} << 30;
  const double k = static_cast<double>(s.coefficient_bound());
  const double hi = static_cast<double>(std::max(h1, h2));
  if (h1 >= kMaxH || h2 >= kMaxH ||
      4.0 * k * static_cast<double>(h1) * static_cast<double>(h2) * hi >= 0x1p61) {
    return via_bigint(s, a1, a2);
  }

  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::int64_t cross = s.coefficient(i) * a1.c[i] * a2.c[i];
    alpha += cross * a2.c[i];
    beta += cross * a1.c[i];
  }
  if (alpha == 0 && beta == 0) return {SmallStatus::LineOnSurface, {}};

  const auto g0 = static_cast<std::int64_t>(gcd_u64(abs_u64(alpha), abs_u64(beta)));
  alpha /= g0;
  beta /= g0;

  std::array<i128, 4> raw;
  for (std::size_t i = 0; i < 4; ++i) {
    raw[i] = static_cast<i128>(alpha) * a1.c[i] - static_cast<i128>(beta) * a2.c[i];
  }

  // With gcd(alpha, beta) = 1 the content of alpha*A1 - beta*A2 divides every
  // 2x2 minor of the matrix (A1; A2), so it is found modulo their gcd.
  std::uint64_t minors = 0;
  for (std::size_t i = 0; i < 4 && minors != 1; ++i) {
    for (std::size_t j = i + 1; j < 4 && minors != 1; ++j) {
      const std::int64_t m = a1.c[i] * a2.c[j] - a1.c[j] * a2.c[i];
      minors = gcd_u64(minors, abs_u64(m));
    }
  }
  if (minors == 0) return via_bigint(s, a1, a2);
  std::uint64_t content = minors;
  for (std::size_t i = 0; i < 4 && content > 1; ++i) {
    content = gcd_u64(content, static_cast<std::uint64_t>(abs_u128(raw[i]) % content));
  }

  i128 divisor = static_cast<i128>(content);
  for (i128 v : raw) {
    if (v != 0) {
      if (v < 0) divisor = -divisor;
      break;
    }
  }
  SmallOutcome out{SmallStatus::Ok, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    const i128 v = raw[i] / divisor;
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < -std::numeric_limits<std::int64_t>::max()) {
      return {SmallStatus::Unrepresentable, {}};
    }
    out.point.c[i] = static_cast<std::int64_t>(v);
  }
  return out;
}

}  // namespace cubic_mw::detail
