#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cubic_mw/point_index.hpp"
#include "cubic_mw/policy.hpp"
#include "cubic_mw/surface.hpp"

namespace cubic_mw {

/// N(H) and N(H) / (H * ln(H)^(rank - 1)) for one height bound (h_max).
struct ManinRow {
  std::int64_t height;
  std::size_t count;
  double ratio;
};

/// One row per entry of `heights` (each >= 2, ascending). Counts match
/// count_points; the surface is enumerated once at the largest height.
std::vector<ManinRow> manin_series(const DiagonalSurface& s, const ExclusionPolicy& policy,
                                   std::span<const std::int64_t> heights);

/// Same rows from points already enumerated and filtered; `points` must hold
/// every admitted point with h_max <= heights.back().
std::vector<ManinRow> manin_series(const DiagonalSurface& s, std::span<const SmallPoint> points,
                                   std::span<const std::int64_t> heights);

struct DecomposabilityStat {
  std::size_t bound = 0;
  std::size_t decomposable = 0;
  double fraction = 0.0;
  /// witnesses[i - 1] = (j, k) with j <= k < i. For j < k, point(j) o point(k)
  /// = point(i); for j == k, point(i) lies on the tangent plane at point(j),
  /// so it is one of the values of the multivalued point(j) o point(j).
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> witnesses;
};

/// Counts indices i <= N that are strongly decomposable: i = j o k for some
/// j, k < i, the tangent case j == k included. Secant witnesses are preferred.
/// Throws OutOfRange unless 1 <= N <= idx.size().
DecomposabilityStat strong_decomposability(const PointIndex& idx, std::size_t bound);

/// `H,count,ratio` with ratio to 6 significant digits.
void write_manin_csv(std::ostream& out, std::span<const ManinRow> rows);
/// `N,decomposable,fraction` with fraction to 6 significant digits.
void write_decomposability_csv(std::ostream& out, std::span<const DecomposabilityStat> rows);

}  // namespace cubic_mw
