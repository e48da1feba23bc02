#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/policy.hpp"
#include "cubic_mw/surface.hpp"

namespace cubic_mw {

/// Points of a surface in point_order, named by their 1-based position.
///
/// Every admitted point with h_sum <= hsum_bound() is present; points beyond
/// that bound may be present too but the list is not complete there. Immutable
/// after construction.
class PointIndex {
 public:
  /// `points` must be admitted by `policy`, lie on `surface` and be distinct;
  /// they are sorted here.
  PointIndex(DiagonalSurface surface, std::vector<SmallPoint> points, std::int64_t hsum_bound,
             ExclusionPolicy policy = {});

  const DiagonalSurface& surface() const { return surface_; }
  const ExclusionPolicy& policy() const { return policy_; }
  std::int64_t hsum_bound() const { return hsum_bound_; }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  /// 1-based access.
  const SmallPoint& small(std::size_t index) const { return points_[index - 1]; }
  ProjPoint point(std::size_t index) const { return ProjPoint::from_small(small(index)); }
  std::int64_t h_max(std::size_t index) const { return h_max_[index - 1]; }
  std::int64_t h_sum(std::size_t index) const { return points_[index - 1].h_sum(); }
  std::span<const SmallPoint> points() const { return points_; }

  std::optional<std::size_t> lookup(const SmallPoint& p) const;
  std::optional<std::size_t> lookup(const ProjPoint& p) const;

  /// h_sum of the n-th point. Throws OutOfRange unless 1 <= n <= size().
  std::int64_t index_to_height_bound(std::size_t n) const;

  /// Largest n whose prefix 1..n is guaranteed complete.
  std::size_t complete_prefix() const { return complete_prefix_; }

 private:
  DiagonalSurface surface_;
  std::vector<SmallPoint> points_;
  std::vector<std::int64_t> h_max_;
  std::unordered_map<SmallPoint, std::uint32_t, SmallPointHash> reverse_;
  std::int64_t hsum_bound_;
  ExclusionPolicy policy_;
  std::size_t complete_prefix_ = 0;
};

/// Index over the admitted points with h_max <= H; complete up to h_sum H.
PointIndex build_index(const DiagonalSurface& s, std::int64_t h, const ExclusionPolicy& policy = {});

/// Index built from an h_max or h_sum bounded enumeration. Either way it is
/// complete up to h_sum bound.value; the h_sum region is the cheaper one to
/// enumerate and holds exactly the complete part.
PointIndex build_index(const DiagonalSurface& s, HeightBound bound,
                       const ExclusionPolicy& policy = {});

}  // namespace cubic_mw
