#pragma once

#include <array>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cubic_mw/surface.hpp"

namespace cubic_mw {

enum class CompositionFailure {
  CoincidentPoints,  ///< A1 == A2; the secant is undefined.
  LineOnSurface,     ///< The line through A1 and A2 lies in the surface.
};

std::string_view to_string(CompositionFailure f);

/// Result of the secant composition A1 o A2: either the third intersection
/// point of the line A1A2 with the surface, or the reason there is none.
class CompositionOutcome {
 public:
  CompositionOutcome(ProjPoint p) : value_(std::move(p)) {}
  CompositionOutcome(CompositionFailure f) : value_(f) {}

  bool ok() const { return std::holds_alternative<ProjPoint>(value_); }
  explicit operator bool() const { return ok(); }
  const ProjPoint& point() const { return std::get<ProjPoint>(value_); }
  CompositionFailure failure() const { return std::get<CompositionFailure>(value_); }

  friend bool operator==(const CompositionOutcome&, const CompositionOutcome&) = default;

 private:
  std::variant<ProjPoint, CompositionFailure> value_;
};

/// alpha = a*x1*x2^2 + b*y1*y2^2 + c*z1*z2^2 + d*u1*u2^2,
/// beta  = a*x1^2*x2 + b*y1^2*y2 + c*z1^2*z2 + d*u1^2*u2.
///
/// Restricted to the line A1 + t*A2 the cubic form is 3*beta*t + 3*alpha*t^2
/// (plus the vanishing end terms), so the third root is t = -beta/alpha.
struct AlphaBeta {
  BigInt alpha;
  BigInt beta;
};

AlphaBeta alpha_beta(const DiagonalSurface& s, const ProjPoint& a1, const ProjPoint& a2);

/// Third point on the line through A1 and A2, as
/// canonicalize(alpha*A1 - beta*A2). The result may equal A1 or A2 when the
/// line is tangent there; that is still a success.
CompositionOutcome compose(const DiagonalSurface& s, const ProjPoint& a1, const ProjPoint& a2);

/// The plane p*x + q*y + r*z + s*u = 0, primitive with leading coefficient positive.
struct TangentPlane {
  std::array<BigInt, 4> coeffs;

  bool contains(const ProjPoint& p) const;
  bool contains(const SmallPoint& p) const;
};

/// Tangent plane at P: the gradient (a*x^2, b*y^2, c*z^2, d*u^2) up to scale.
TangentPlane tangent_plane(const DiagonalSurface& s, const ProjPoint& p);

/// Candidates (other than P) lying in the tangent plane at P, in input order.
/// This is the part of the multivalued P o P visible among known points.
std::vector<ProjPoint> tangent_section_points(const DiagonalSurface& s, const ProjPoint& p,
                                              std::span<const ProjPoint> candidates);

}  // namespace cubic_mw
