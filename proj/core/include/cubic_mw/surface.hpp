#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace cubic_mw {

using BigInt = mpz_class;

/// The surface a*x^3 + b*y^3 + c*z^3 + d*u^3 = 0 over Q.
///
/// Coefficients are nonzero and bounded by 2^31 in absolute value so that the
/// 64-bit fast paths used by enumeration and composition stay exact. The
/// Picard rank is metadata supplied by the caller; it only enters the
/// point-count asymptotics.
class DiagonalSurface {
 public:
  DiagonalSurface(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                  int picard_rank = 1);

  std::int64_t a() const { return coeffs_[0]; }
  std::int64_t b() const { return coeffs_[1]; }
  std::int64_t c() const { return coeffs_[2]; }
  std::int64_t d() const { return coeffs_[3]; }
  std::int64_t coefficient(std::size_t i) const { return coeffs_[i]; }
  const std::array<std::int64_t, 4>& coefficients() const { return coeffs_; }

  int picard_rank() const { return picard_rank_; }

  /// K = max(|a|, |b|, |c|, |d|).
  std::int64_t coefficient_bound() const { return bound_; }

  friend bool operator==(const DiagonalSurface&, const DiagonalSurface&) = default;

 private:
  std::array<std::int64_t, 4> coeffs_;
  int picard_rank_;
  std::int64_t bound_;
};

std::ostream& operator<<(std::ostream& os, const DiagonalSurface& s);

/// Canonical point with machine-word coordinates. Used on hot paths
/// (enumeration, index lookup, TGS) where every coordinate is known to fit.
struct SmallPoint {
  std::array<std::int64_t, 4> c{};

  std::int64_t h_max() const;
  std::int64_t h_sum() const;

  friend bool operator==(const SmallPoint&, const SmallPoint&) = default;
};

/// Total order on canonical points: h_sum first, then the signed coordinates
/// (x, y, z, u) lexicographically ascending.
std::strong_ordering point_order(const SmallPoint& p, const SmallPoint& q);

struct SmallPointHash {
  std::size_t operator()(const SmallPoint& p) const noexcept;
};

/// A rational point of P^3 in canonical form: primitive integer coordinates
/// whose first nonzero entry is positive. Only `canonicalize` constructs one
/// from raw coordinates.
class ProjPoint {
 public:
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  const BigInt& x() const { return c_[0]; }
  const BigInt& y() const { return c_[1]; }
  const BigInt& z() const { return c_[2]; }
  const BigInt& u() const { return c_[3]; }
  const std::array<BigInt, 4>& coords() const { return c_; }

  /// Machine-word form, or nullopt if some coordinate exceeds int64.
  std::optional<SmallPoint> to_small() const;
  /// `p` must already be canonical.
  static ProjPoint from_small(const SmallPoint& p);

  /// "(x:y:z:u)"
  std::string to_string() const;

  friend bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.c_ == q.c_; }

 private:
  friend ProjPoint canonicalize(std::array<BigInt, 4> raw);
  explicit ProjPoint(std::array<BigInt, 4> c) : c_(std::move(c)) {}

  std::array<BigInt, 4> c_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

/// Divides out the gcd and fixes the sign so the first nonzero coordinate is
/// positive. Throws ZeroQuadruple for (0,0,0,0).
ProjPoint canonicalize(std::array<BigInt, 4> raw);
ProjPoint canonicalize(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t u);

/// Same normalization on machine words; returns nullopt for the zero quadruple.
std::optional<SmallPoint> canonicalize_small(std::array<std::int64_t, 4> raw);

BigInt h_max(const ProjPoint& p);
BigInt h_sum(const ProjPoint& p);

/// a*x^3 + b*y^3 + c*z^3 + d*u^3, exactly.
BigInt evaluate(const DiagonalSurface& s, const ProjPoint& p);
bool is_on_surface(const DiagonalSurface& s, const ProjPoint& p);

/// True for points of the form (x : -x : z : -z).
bool is_trivial_line_point(const ProjPoint& p);
bool is_trivial_line_point(const SmallPoint& p);

std::strong_ordering point_order(const ProjPoint& p, const ProjPoint& q);

inline std::strong_ordering operator<=>(const ProjPoint& p, const ProjPoint& q) {
  return point_order(p, q);
}

}  // namespace cubic_mw

template <>
struct std::hash<cubic_mw::SmallPoint> : cubic_mw::SmallPointHash {};
