#pragma once

#include <cstdint>

#include "cubic_mw/surface.hpp"

namespace cubic_mw::detail {

enum class SmallStatus : std::uint8_t {
  Ok,
  Coincident,
  LineOnSurface,
  /// The composition exists but some coordinate of the canonical result does
  /// not fit in int64, so it cannot be a point of any index.
  Unrepresentable,
};

struct SmallOutcome {
  SmallStatus status;
  SmallPoint point;
};

/// Machine-word secant composition, exact. `h1` and `h2` are the h_max of the
/// inputs. Falls back to the arbitrary precision route when the intermediate
/// quantities could overflow.
SmallOutcome compose_small(const DiagonalSurface& s, const SmallPoint& a1, std::int64_t h1,
                           const SmallPoint& a2, std::int64_t h2);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace cubic_mw::detail
