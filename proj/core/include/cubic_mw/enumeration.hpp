#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cubic_mw/policy.hpp"
#include "cubic_mw/surface.hpp"

namespace cubic_mw {

enum class HeightKind { Max, Sum };

/// Region of points to enumerate: h_max <= value or h_sum <= value.
struct HeightBound {
  HeightKind kind = HeightKind::Max;
  std::int64_t value = 0;

  static HeightBound max(std::int64_t h) { return {HeightKind::Max, h}; }
  static HeightBound sum(std::int64_t h) { return {HeightKind::Sum, h}; }

  bool contains(const SmallPoint& p) const {
    return (kind == HeightKind::Max ? p.h_max() : p.h_sum()) <= value;
  }
  friend bool operator==(const HeightBound&, const HeightBound&) = default;
};

/// Calls `visit` once for every canonical point of the surface inside `bound`,
/// in no particular order.
///
/// Meet in the middle on a*x^3 + b*y^3 = -(c*z^3 + d*u^3): both sides are
/// produced as streams of pair sums in increasing value, one cursor per first
/// coordinate, and joined window by window. Memory is proportional to the
/// bound plus one window, never to the number of pairs. Throws
/// PreconditionError if the bound is below 1 or the cubes would overflow int64.
void for_each_point(const DiagonalSurface& s, HeightBound bound,
                    const std::function<void(const SmallPoint&)>& visit);

/// All canonical points with h_max <= H, each once, sorted by point_order.
std::vector<ProjPoint> enumerate_points(const DiagonalSurface& s, std::int64_t h);

/// Points inside `bound` admitted by `policy`, sorted by point_order.
std::vector<SmallPoint> enumerate_small(const DiagonalSurface& s, HeightBound bound,
                                        const ExclusionPolicy& policy = {});

/// Number of points with h_max <= H admitted by `policy`.
std::size_t count_points(const DiagonalSurface& s, std::int64_t h,
                         const ExclusionPolicy& policy = {});

}  // namespace cubic_mw
