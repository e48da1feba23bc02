#include "cubic_mw/policy.hpp"

#include <algorithm>

#include "cubic_mw/errors.hpp"

namespace cubic_mw {

ExclusionPolicy ExclusionPolicy::exclude_trivial_lines(std::vector<ProjPoint> keep) {
  ExclusionPolicy policy;
  policy.exclude_trivial_lines_ = true;
  for (const auto& p : keep) {
    if (!is_trivial_line_point(p)) {
      throw PreconditionError("keep-list point " + p.to_string() + " is not on a trivial line");
    }
    auto small = p.to_small();
    if (small) policy.keep_small_.push_back(*small);
  }
  policy.keep_ = std::move(keep);
  return policy;
}

bool ExclusionPolicy::admits(const SmallPoint& p) const {
  if (!exclude_trivial_lines_ || !is_trivial_line_point(p)) return true;
  return std::find(keep_small_.begin(), keep_small_.end(), p) != keep_small_.end();
}

bool ExclusionPolicy::admits(const ProjPoint& p) const {
  if (!exclude_trivial_lines_ || !is_trivial_line_point(p)) return true;
  return std::find(keep_.begin(), keep_.end(), p) != keep_.end();
}

}  // namespace cubic_mw
