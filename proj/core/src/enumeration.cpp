#include "cubic_mw/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "cubic_mw/detail/small_compose.hpp"
#include "cubic_mw/errors.hpp"

namespace cubic_mw {

namespace {

struct PairEntry {
  std::int64_t value;
  std::int32_t t;
  std::int32_t s;
};

/// All pairs (t, s) of one side of the equation, as a merge of per-t streams
/// ordered by p*t^3 + q*s^3.
class PairStreams {
 public:
  PairStreams(std::int64_t p, std::int64_t q, HeightBound bound, bool canonical_half,
              const std::vector<std::int64_t>& cubes)
      : q_(q), bound_(bound.value), cubes_(cubes) {
    const auto b = static_cast<std::int32_t>(bound.value);
    for (std::int32_t t = -b; t <= b; ++t) {
      if (canonical_half && t < 0) continue;
      const std::int32_t smax = bound.kind == HeightKind::Max ? b : b - std::abs(t);
      std::int32_t lo = -smax;
      if (canonical_half && t == 0) lo = 0;
      Cursor c;
      c.base = p * cube(t);
      if (q > 0) {
        c.s = lo;
        c.stop = smax + 1;
        c.step = 1;
      } else {
        c.s = smax;
        c.stop = lo - 1;
        c.step = -1;
      }
      c.t = t;
      total_ += static_cast<std::uint64_t>(smax - lo + 1);
      cursors_.push_back(c);
    }
  }

  bool exhausted() const { return cursors_.empty(); }
  std::uint64_t total() const { return total_; }

  std::int64_t min_value() const {
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    for (const auto& c : cursors_) m = std::min(m, value(c));
    return m;
  }

  std::int64_t max_value() const {
    std::int64_t m = std::numeric_limits<std::int64_t>::min();
    for (const auto& c : cursors_) m = std::max(m, c.base + q_ * cube(c.stop - c.step));
    return m;
  }

  /// Feeds every remaining pair with value < hi to `sink`, advancing cursors.
  /// Gives up once `limit` pairs were fed and returns false; the cursors are
  /// then partly advanced and must be restored by the caller.
  template <typename Sink>
  bool drain_below(std::int64_t hi, Sink&& sink,
                   std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    std::size_t live = 0;
    std::size_t fed = 0;
    for (std::size_t k = 0; k < cursors_.size(); ++k) {
      Cursor c = cursors_[k];
      while (c.s != c.stop) {
        const std::int64_t v = value(c);
        if (v >= hi) break;
        if (fed++ == limit) return false;
        sink(PairEntry{v, c.t, c.s});
        c.s += c.step;
      }
      if (c.s != c.stop) cursors_[live++] = c;
    }
    cursors_.resize(live);
    return true;
  }

  struct Cursor {
    std::int64_t base;
    std::int32_t t;
    std::int32_t s;
    std::int32_t stop;
    std::int32_t step;
  };

  const std::vector<Cursor>& cursors() const { return cursors_; }
  void restore(const std::vector<Cursor>& saved) { cursors_ = saved; }

 private:

  std::int64_t cube(std::int32_t v) const { return cubes_[static_cast<std::size_t>(v + bound_)]; }
  std::int64_t value(const Cursor& c) const { return c.base + q_ * cube(c.s); }

  std::int64_t q_;
  std::int64_t bound_;
  const std::vector<std::int64_t>& cubes_;
  std::vector<Cursor> cursors_;
  std::uint64_t total_ = 0;
};

/// Open addressing multimap from pair value to entries of one window.
class WindowTable {
 public:
  void rebuild(const std::vector<PairEntry>& entries) {
    const std::size_t want = std::max<std::size_t>(16, std::bit_ceil(2 * entries.size()));
    shift_ = 64 - std::countr_zero(want);
    mask_ = want - 1;
    slots_.assign(want, -1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::size_t h = slot(entries[i].value);
      while (slots_[h] >= 0) h = (h + 1) & mask_;
      slots_[h] = static_cast<std::int32_t>(i);
    }
  }

  template <typename F>
  void for_each_match(const std::vector<PairEntry>& entries, std::int64_t value, F&& f) const {
    for (std::size_t h = slot(value); slots_[h] >= 0; h = (h + 1) & mask_) {
      const PairEntry& e = entries[static_cast<std::size_t>(slots_[h])];
      if (e.value == value) f(e);
    }
  }

 private:
  std::size_t slot(std::int64_t v) const {
    return static_cast<std::size_t>((static_cast<std::uint64_t>(v) * 0x9E3779B97F4A7C15ull) >>
                                    shift_);
  }

  std::vector<std::int32_t> slots_;
  int shift_ = 60;
  std::size_t mask_ = 15;
};

void check_bound(const DiagonalSurface& s, HeightBound bound) {
  if (bound.value < 1) throw PreconditionError("height bound must be at least 1");
  if (bound.value >= (std::int64_t{1} << 30)) throw PreconditionError("height bound too large");
  const long double b3 = std::pow(static_cast<long double>(bound.value), 3);
  const long double left = (std::abs(s.a()) + std::abs(s.b())) * b3;
  const long double right = (std::abs(s.c()) + std::abs(s.d())) * b3;
  if (std::max(left, right) >= 0x1p61L) {
    throw PreconditionError("height bound too large for 64-bit pair sums on this surface");
  }
}

}  // namespace

void for_each_point(const DiagonalSurface& s, HeightBound bound,
                    const std::function<void(const SmallPoint&)>& visit) {
  check_bound(s, bound);
  const std::int64_t b = bound.value;
  std::vector<std::int64_t> cubes(static_cast<std::size_t>(2 * b + 1));
  for (std::int64_t v = -b; v <= b; ++v) cubes[static_cast<std::size_t>(v + b)] = v * v * v;

  // a*x^3 + b*y^3 on the left, -(c*z^3 + d*u^3) on the right. Restricting the
  // left pair to x > 0 or (x == 0, y >= 0) picks one sign representative.
  PairStreams left(s.a(), s.b(), bound, /*canonical_half=*/true, cubes);
  PairStreams right(-s.c(), -s.d(), bound, /*canonical_half=*/false, cubes);

  // Matches need a value present on both sides.
  const std::int64_t first = std::max(left.min_value(), right.min_value());
  const std::int64_t last = std::min(left.max_value(), right.max_value());
  if (first > last) return;
  left.drain_below(first, [](const PairEntry&) {});
  right.drain_below(first, [](const PairEntry&) {});

  const double target = std::clamp(2.0 * static_cast<double>(2 * b + 1), 8192.0, 1048576.0);
  const auto limit = static_cast<std::size_t>(4 * target);
  const double windows = std::max(1.0, static_cast<double>(left.total()) / target);
  double width =
      std::max(1.0, (static_cast<double>(last) - static_cast<double>(first)) / windows);

  auto emit = [&](const PairEntry& l, std::int32_t z, std::int32_t u) {
    const std::int64_t x = l.t;
    const std::int64_t y = l.s;
    if (x == 0 && y == 0) {
      // Sign representative must come from (z, u).
      if (z < 0 || (z == 0 && u <= 0)) return;
    }
    SmallPoint p{{x, y, z, u}};
    if (bound.kind == HeightKind::Sum && p.h_sum() > b) return;
    std::uint64_t g = 0;
    for (std::int64_t v : p.c) g = detail::gcd_u64(g, static_cast<std::uint64_t>(std::abs(v)));
    if (g != 1) return;
    visit(p);
  };

  std::vector<PairEntry> window;
  std::vector<PairStreams::Cursor> saved;
  WindowTable table;
  std::int64_t lo = first;
  while (lo <= last && !left.exhausted() && !right.exhausted()) {
    const double hi_d = static_cast<double>(lo) + width;
    const std::int64_t hi =
        hi_d > static_cast<double>(last) ? last + 1 : std::max(lo + 1, static_cast<std::int64_t>(hi_d));
    window.clear();
    saved = left.cursors();
    if (!left.drain_below(hi, [&](const PairEntry& e) { window.push_back(e); }, limit)) {
      // Too dense for one window: rewind and narrow.
      left.restore(saved);
      width = std::max(1.0, width / 8.0);
      continue;
    }
    table.rebuild(window);
    if (window.empty()) {
      right.drain_below(hi, [](const PairEntry&) {});
    } else {
      right.drain_below(hi, [&](const PairEntry& r) {
        table.for_each_match(window, r.value, [&](const PairEntry& l) { emit(l, r.t, r.s); });
      });
    }
    const double fill = static_cast<double>(window.size());
    width *= std::clamp(target / std::max(fill, 1.0), 0.25, 4.0);
    width = std::max(width, 1.0);
    lo = hi;
  }
}

std::vector<SmallPoint> enumerate_small(const DiagonalSurface& s, HeightBound bound,
                                        const ExclusionPolicy& policy) {
  std::vector<SmallPoint> out;
  for_each_point(s, bound, [&](const SmallPoint& p) {
    if (policy.admits(p)) out.push_back(p);
  });
  std::sort(out.begin(), out.end(),
            [](const SmallPoint& p, const SmallPoint& q) { return point_order(p, q) < 0; });
  return out;
}

std::vector<ProjPoint> enumerate_points(const DiagonalSurface& s, std::int64_t h) {
  auto small = enumerate_small(s, HeightBound::max(h));
  std::vector<ProjPoint> out;
  out.reserve(small.size());
  for (const auto& p : small) out.push_back(ProjPoint::from_small(p));
  return out;
}

std::size_t count_points(const DiagonalSurface& s, std::int64_t h, const ExclusionPolicy& policy) {
  std::size_t n = 0;
  for_each_point(s, HeightBound::max(h), [&](const SmallPoint& p) {
    if (policy.admits(p)) ++n;
  });
  return n;
}

}  // namespace cubic_mw
