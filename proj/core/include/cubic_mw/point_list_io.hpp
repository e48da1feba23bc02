#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/surface.hpp"

namespace cubic_mw {

/// A raw (policy-free) enumeration as stored on disk:
///
///     # surface <label> <a> <b> <c> <d>
///     # hmax_bound <H>          (or `# hsum_bound <H>`)
///     x y z u
///     ...
///
/// Points are canonical and in point_order.
struct PointList {
  std::string label;
  std::array<std::int64_t, 4> coefficients{};
  HeightBound bound;
  std::vector<SmallPoint> points;
};

void write_point_list(std::ostream& out, const PointList& list);
PointList read_point_list(std::istream& in);

/// Writes through a temporary file and renames, so concurrent readers never
/// observe a partial file. Throws IoError.
void save_point_list(const std::filesystem::path& path, const PointList& list);
PointList load_point_list(const std::filesystem::path& path);

}  // namespace cubic_mw
