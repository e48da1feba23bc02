#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/point_list_io.hpp"
#include "cubic_mw/surface.hpp"

namespace cubic_mw::cli {

/// Raw enumerations on disk, keyed by coefficients and bound. A request is
/// served by any stored list whose region contains it, cut down to the
/// requested region.
class PointCache {
 public:
  /// An empty directory disables the cache.
  explicit PointCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  /// Cached list covering `bound`, else a fresh enumeration (stored when
  /// `store` is set). Unreadable cache files are skipped.
  PointList obtain(const std::string& label, const DiagonalSurface& s, HeightBound bound,
                   bool store = true);

  /// Stored h_sum list with the largest bound, if any (h_max lists count too).
  std::optional<PointList> largest(const std::string& label, const DiagonalSurface& s) const;

  void store(const PointList& list) const;

  std::filesystem::path path_for(const DiagonalSurface& s, HeightBound bound) const;

 private:
  struct Entry {
    std::filesystem::path path;
    HeightBound bound;
  };
  std::vector<Entry> entries_for(const DiagonalSurface& s) const;

  std::filesystem::path dir_;
};

/// Fresh enumeration of `bound`, as a raw point list in point_order.
PointList enumerate_list(const std::string& label, const DiagonalSurface& s, HeightBound bound);

}  // namespace cubic_mw::cli
