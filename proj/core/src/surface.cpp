#include "cubic_mw/surface.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "cubic_mw/errors.hpp"

namespace cubic_mw {

namespace {

constexpr std::int64_t kMaxCoefficient = std::int64_t{1} << 31;

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

DiagonalSurface::DiagonalSurface(std::int64_t a, std::int64_t b, std::int64_t c,
                                 std::int64_t d, int picard_rank)
    : coeffs_{a, b, c, d}, picard_rank_(picard_rank), bound_(0) {
  for (std::int64_t k : coeffs_) {
    if (k == 0) throw PreconditionError("surface coefficients must be nonzero");
    if (k >= kMaxCoefficient || k <= -kMaxCoefficient) {
      throw PreconditionError("surface coefficient exceeds 2^31 in absolute value");
    }
    bound_ = std::max(bound_, std::abs(k));
  }
  if (picard_rank < 1) throw PreconditionError("Picard rank must be positive");
}

std::ostream& operator<<(std::ostream& os, const DiagonalSurface& s) {
  return os << s.a() << "x^3 + " << s.b() << "y^3 + " << s.c() << "z^3 + " << s.d()
            << "u^3";
}

std::int64_t SmallPoint::h_max() const {
  std::int64_t h = 0;
  for (std::int64_t v : c) h = std::max(h, std::abs(v));
  return h;
}

std::int64_t SmallPoint::h_sum() const {
  std::int64_t h = 0;
  for (std::int64_t v : c) h += std::abs(v);
  return h;
}

std::strong_ordering point_order(const SmallPoint& p, const SmallPoint& q) {
  if (auto cmp = p.h_sum() <=> q.h_sum(); cmp != 0) return cmp;
  return p.c <=> q.c;
}

std::size_t SmallPointHash::operator()(const SmallPoint& p) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (std::int64_t v : p.c) {
    h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

std::optional<SmallPoint> ProjPoint::to_small() const {
  SmallPoint p;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c_[i].fits_slong_p()) return std::nullopt;
    p.c[i] = c_[i].get_si();
  }
  return p;
}

ProjPoint ProjPoint::from_small(const SmallPoint& p) {
  return ProjPoint({BigInt(static_cast<long>(p.c[0])), BigInt(static_cast<long>(p.c[1])),
                    BigInt(static_cast<long>(p.c[2])), BigInt(static_cast<long>(p.c[3]))});
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  return os << '(' << p.x() << ':' << p.y() << ':' << p.z() << ':' << p.u() << ')';
}

ProjPoint canonicalize(std::array<BigInt, 4> raw) {
  BigInt g = 0;
  for (const auto& v : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) throw ZeroQuadruple();
  int lead = 0;
  for (const auto& v : raw) {
    if (sgn(v) != 0) {
      lead = sgn(v);
      break;
    }
  }
  if (lead < 0) g = -g;
  if (g != 1) {
    for (auto& v : raw) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return ProjPoint(std::move(raw));
}

ProjPoint canonicalize(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t u) {
  return canonicalize({BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)),
                       BigInt(static_cast<long>(z)), BigInt(static_cast<long>(u))});
}

std::optional<SmallPoint> canonicalize_small(std::array<std::int64_t, 4> raw) {
  std::uint64_t g = 0;
  for (std::int64_t v : raw) {
    // |INT64_MIN| is not representable; route such inputs through BigInt.
    if (v == std::numeric_limits<std::int64_t>::min()) {
      return canonicalize({BigInt(static_cast<long>(raw[0])), BigInt(static_cast<long>(raw[1])),
                           BigInt(static_cast<long>(raw[2])), BigInt(static_cast<long>(raw[3]))})
          .to_small();
    }
    g = std::gcd(g, static_cast<std::uint64_t>(std::abs(v)));
  }
  if (g == 0) return std::nullopt;
  std::int64_t lead = 0;
  for (std::int64_t v : raw) {
    if (v != 0) {
      lead = v;
      break;
    }
  }
  auto div = static_cast<std::int64_t>(g);
  if (lead < 0) div = -div;
  SmallPoint p;
  for (std::size_t i = 0; i < 4; ++i) p.c[i] = raw[i] / div;
  return p;
}

BigInt h_max(const ProjPoint& p) {
  BigInt h = 0;
  for (const auto& v : p.coords()) {
    BigInt a = abs(v);
    if (a > h) h = a;
  }
  return h;
}

BigInt h_sum(const ProjPoint& p) {
  BigInt h = 0;
  for (const auto& v : p.coords()) h += abs(v);
  return h;
}

BigInt evaluate(const DiagonalSurface& s, const ProjPoint& p) {
  BigInt total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    BigInt cube = p[i] * p[i] * p[i];
    total += BigInt(static_cast<long>(s.coefficient(i))) * cube;
  }
  return total;
}

bool is_on_surface(const DiagonalSurface& s, const ProjPoint& p) {
  return sgn(evaluate(s, p)) == 0;
}

bool is_trivial_line_point(const ProjPoint& p) {
  return p.y() == -p.x() && p.u() == -p.z();
}

bool is_trivial_line_point(const SmallPoint& p) {
  return p.c[1] == -p.c[0] && p.c[3] == -p.c[2];
}

std::strong_ordering point_order(const ProjPoint& p, const ProjPoint& q) {
  if (auto c = to_ordering(cmp(h_sum(p), h_sum(q))); c != 0) return c;
  for (std::size_t i = 0; i < 4; ++i) {
    if (auto c = to_ordering(cmp(p[i], q[i])); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace cubic_mw
