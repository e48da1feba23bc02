#include "point_cache.hpp"

#include <algorithm>
#include <iostream>
#include <system_error>

#include "cubic_mw/errors.hpp"

namespace cubic_mw::cli {

namespace {

std::string stem_for(const DiagonalSurface& s) {
  const auto& k = s.coefficients();
  return std::to_string(k[0]) + "_" + std::to_string(k[1]) + "_" + std::to_string(k[2]) + "_" +
         std::to_string(k[3]);
}

/// A stored region covers a request when every point of the request lies in it.
bool covers(HeightBound stored, HeightBound want) {
  if (stored.kind == want.kind) return stored.value >= want.value;
  // h_sum <= B implies h_max <= B; h_max <= H implies h_sum <= 4H.
  if (want.kind == HeightKind::Sum) return stored.value >= want.value;
  return stored.value >= 4 * want.value;
}

}  // namespace

PointList enumerate_list(const std::string& label, const DiagonalSurface& s, HeightBound bound) {
  PointList list;
  list.label = label;
  list.coefficients = s.coefficients();
  list.bound = bound;
  list.points = enumerate_small(s, bound);
  return list;
}

std::filesystem::path PointCache::path_for(const DiagonalSurface& s, HeightBound bound) const {
  const char* kind = bound.kind == HeightKind::Max ? "hmax" : "hsum";
  return dir_ / (stem_for(s) + "." + kind + std::to_string(bound.value) + ".pts");
}

std::vector<PointCache::Entry> PointCache::entries_for(const DiagonalSurface& s) const {
  std::vector<Entry> out;
  std::error_code ec;
  if (!enabled() || !std::filesystem::is_directory(dir_, ec)) return out;
  const std::string prefix = stem_for(s) + ".";
  for (const auto& de : std::filesystem::directory_iterator(dir_, ec)) {
    const std::string name = de.path().filename().string();
    if (name.rfind(prefix, 0) != 0 || de.path().extension() != ".pts") continue;
    std::string rest = name.substr(prefix.size());
    rest = rest.substr(0, rest.size() - 4);
    HeightBound b;
    if (rest.rfind("hmax", 0) == 0) {
      b.kind = HeightKind::Max;
    } else if (rest.rfind("hsum", 0) == 0) {
      b.kind = HeightKind::Sum;
    } else {
      continue;
    }
    const std::string digits = rest.substr(4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) continue;
    b.value = std::stoll(digits);
    out.push_back({de.path(), b});
  }
  return out;
}

PointList PointCache::obtain(const std::string& label, const DiagonalSurface& s,
                             HeightBound bound, bool store_result) {
  auto entries = entries_for(s);
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.bound.value < b.bound.value; });
  for (const auto& e : entries) {
    if (!covers(e.bound, bound)) continue;
    try {
      PointList list = load_point_list(e.path);
      if (list.coefficients != s.coefficients() || list.bound != e.bound) continue;
      std::erase_if(list.points, [&](const SmallPoint& p) { return !bound.contains(p); });
      list.label = label;
      list.bound = bound;
      return list;
    } catch (const IoError& err) {
      std::cerr << "note: skipping cache file " << e.path.string() << ": " << err.what() << '\n';
    }
  }
  PointList list = enumerate_list(label, s, bound);
  if (store_result) store(list);
  return list;
}

std::optional<PointList> PointCache::largest(const std::string& label,
                                             const DiagonalSurface& s) const {
  auto entries = entries_for(s);
  // Rank stored regions by the h_sum range they are complete for.
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.bound.value > b.bound.value; });
  for (const auto& e : entries) {
    try {
      PointList list = load_point_list(e.path);
      if (list.coefficients != s.coefficients() || list.bound != e.bound) continue;
      list.label = label;
      return list;
    } catch (const IoError& err) {
      std::cerr << "note: skipping cache file " << e.path.string() << ": " << err.what() << '\n';
    }
  }
  return std::nullopt;
}

void PointCache::store(const PointList& list) const {
  if (!enabled()) return;
  const DiagonalSurface s(list.coefficients[0], list.coefficients[1], list.coefficients[2],
                          list.coefficients[3]);
  save_point_list(path_for(s, list.bound), list);
}

}  // namespace cubic_mw::cli
