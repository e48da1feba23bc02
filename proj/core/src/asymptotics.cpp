#include "cubic_mw/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "cubic_mw/detail/small_compose.hpp"
#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/errors.hpp"

namespace cubic_mw {

namespace {

std::string six_significant(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Whether q lies on the tangent plane at p: sum of coef * p^2 * q is zero.
bool on_tangent_plane(const DiagonalSurface& s, const SmallPoint& p, std::int64_t hp,
                      const SmallPoint& q, std::int64_t hq) {
  const long double size = 4.0L * static_cast<long double>(s.coefficient_bound()) * hp * hp * hq;
  if (size < 0x1p125L) {
    __int128 sum = 0;
    for (std::size_t m = 0; m < 4; ++m) {
      sum += static_cast<__int128>(s.coefficient(m)) * p.c[m] * p.c[m] * q.c[m];
    }
    return sum == 0;
  }
  BigInt sum = 0;
  for (std::size_t m = 0; m < 4; ++m) {
    sum += BigInt(static_cast<long>(s.coefficient(m))) * BigInt(static_cast<long>(p.c[m])) *
           BigInt(static_cast<long>(p.c[m])) * BigInt(static_cast<long>(q.c[m]));
  }
  return sgn(sum) == 0;
}

void check_heights(std::span<const std::int64_t> heights) {
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] < 2) throw PreconditionError("Manin heights must be at least 2");
    if (i > 0 && heights[i] <= heights[i - 1]) {
      throw PreconditionError("Manin heights must be strictly ascending");
    }
  }
}

std::vector<ManinRow> rows_from_heights(int picard_rank, std::vector<std::int64_t> hmax,
                                        std::span<const std::int64_t> heights) {
  std::sort(hmax.begin(), hmax.end());
  std::vector<ManinRow> rows;
  const int log_power = picard_rank - 1;
  for (std::int64_t h : heights) {
    const auto count = static_cast<std::size_t>(
        std::upper_bound(hmax.begin(), hmax.end(), h) - hmax.begin());
    const double hd = static_cast<double>(h);
    const double scale = hd * std::pow(std::log(hd), log_power);
    rows.push_back({h, count, static_cast<double>(count) / scale});
  }
  return rows;
}

}  // namespace

std::vector<ManinRow> manin_series(const DiagonalSurface& s, const ExclusionPolicy& policy,
                                   std::span<const std::int64_t> heights) {
  check_heights(heights);
  if (heights.empty()) return {};
  std::vector<std::int64_t> hmax;
  for_each_point(s, HeightBound::max(heights.back()), [&](const SmallPoint& p) {
    if (policy.admits(p)) hmax.push_back(p.h_max());
  });
  return rows_from_heights(s.picard_rank(), std::move(hmax), heights);
}

std::vector<ManinRow> manin_series(const DiagonalSurface& s, std::span<const SmallPoint> points,
                                   std::span<const std::int64_t> heights) {
  check_heights(heights);
  std::vector<std::int64_t> hmax;
  hmax.reserve(points.size());
  for (const auto& p : points) hmax.push_back(p.h_max());
  return rows_from_heights(s.picard_rank(), std::move(hmax), heights);
}

DecomposabilityStat strong_decomposability(const PointIndex& idx, std::size_t bound) {
  if (bound < 1 || bound > idx.size()) {
    throw OutOfRange("decomposability bound " + std::to_string(bound) + " outside 1.." +
                     std::to_string(idx.size()));
  }
  DecomposabilityStat stat;
  stat.bound = bound;
  stat.witnesses.assign(bound, std::nullopt);
  const auto& s = idx.surface();
  for (std::size_t j = 1; j <= bound; ++j) {
    for (std::size_t k = j + 1; k <= bound; ++k) {
      auto out = detail::compose_small(s, idx.small(j), idx.h_max(j), idx.small(k), idx.h_max(k));
      if (out.status != detail::SmallStatus::Ok) continue;
      auto i = idx.lookup(out.point);
      if (!i || *i > bound || *i <= k) continue;
      auto& w = stat.witnesses[*i - 1];
      if (!w) {
        w = std::pair{j, k};
        ++stat.decomposable;
      }
    }
  }
  // y o y: every point of the tangent section at j is a value of j o j.
  for (std::size_t i = 2; i <= bound; ++i) {
    if (stat.witnesses[i - 1]) continue;
    for (std::size_t j = 1; j < i; ++j) {
      if (on_tangent_plane(s, idx.small(j), idx.h_max(j), idx.small(i), idx.h_max(i))) {
        stat.witnesses[i - 1] = std::pair{j, j};
        ++stat.decomposable;
        break;
      }
    }
  }
  stat.fraction = static_cast<double>(stat.decomposable) / static_cast<double>(bound);
  return stat;
}

void write_manin_csv(std::ostream& out, std::span<const ManinRow> rows) {
  out << "H,count,ratio\n";
  for (const auto& r : rows) out << r.height << ',' << r.count << ',' << six_significant(r.ratio) << '\n';
}

void write_decomposability_csv(std::ostream& out, std::span<const DecomposabilityStat> rows) {
  out << "N,decomposable,fraction\n";
  for (const auto& r : rows) {
    out << r.bound << ',' << r.decomposable << ',' << six_significant(r.fraction) << '\n';
  }
}

}  // namespace cubic_mw
