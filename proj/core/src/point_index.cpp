#include "cubic_mw/point_index.hpp"

#include <algorithm>
#include <string>

#include "cubic_mw/errors.hpp"

namespace cubic_mw {

PointIndex::PointIndex(DiagonalSurface surface, std::vector<SmallPoint> points,
                       std::int64_t hsum_bound, ExclusionPolicy policy)
    : surface_(surface),
      points_(std::move(points)),
      hsum_bound_(hsum_bound),
      policy_(std::move(policy)) {
  std::sort(points_.begin(), points_.end(),
            [](const SmallPoint& p, const SmallPoint& q) { return point_order(p, q) < 0; });
  h_max_.reserve(points_.size());
  reverse_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    h_max_.push_back(points_[i].h_max());
    if (!reverse_.emplace(points_[i], static_cast<std::uint32_t>(i + 1)).second) {
      throw PreconditionError("duplicate point in index");
    }
  }
  complete_prefix_ = static_cast<std::size_t>(
      std::partition_point(points_.begin(), points_.end(),
                           [&](const SmallPoint& p) { return p.h_sum() <= hsum_bound_; }) -
      points_.begin());
}

std::optional<std::size_t> PointIndex::lookup(const SmallPoint& p) const {
  auto it = reverse_.find(p);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PointIndex::lookup(const ProjPoint& p) const {
  auto small = p.to_small();
  if (!small) return std::nullopt;
  return lookup(*small);
}

std::int64_t PointIndex::index_to_height_bound(std::size_t n) const {
  if (n < 1 || n > points_.size()) {
    throw OutOfRange("index " + std::to_string(n) + " outside 1.." +
                     std::to_string(points_.size()));
  }
  return h_sum(n);
}

PointIndex build_index(const DiagonalSurface& s, std::int64_t h, const ExclusionPolicy& policy) {
  return build_index(s, HeightBound::max(h), policy);
}

PointIndex build_index(const DiagonalSurface& s, HeightBound bound, const ExclusionPolicy& policy) {
  return PointIndex(s, enumerate_small(s, bound, policy), bound.value, policy);
}

}  // namespace cubic_mw
