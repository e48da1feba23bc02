#pragma once

#include <vector>

#include "cubic_mw/surface.hpp"

namespace cubic_mw {

/// Which enumerated points take part in counting and indexing.
///
/// Surfaces with two pairs of equal coefficients (up to the x<->y swap) contain
/// the rational line (x : -x : z : -z); its points can be dropped, except for
/// an explicit keep list of trivial-line points that are retained anyway.
class ExclusionPolicy {
 public:
  ExclusionPolicy() = default;

  /// Excludes trivial-line points other than `keep`. Every member of `keep`
  /// must itself be a trivial-line point.
  static ExclusionPolicy exclude_trivial_lines(std::vector<ProjPoint> keep = {});

  bool excludes_trivial_lines() const { return exclude_trivial_lines_; }
  const std::vector<ProjPoint>& keep_list() const { return keep_; }

  bool admits(const SmallPoint& p) const;
  bool admits(const ProjPoint& p) const;

 private:
  bool exclude_trivial_lines_ = false;
  std::vector<ProjPoint> keep_;
  std::vector<SmallPoint> keep_small_;
};

}  // namespace cubic_mw
