#include "cubic_mw/composition.hpp"

namespace cubic_mw {

std::string_view to_string(CompositionFailure f) {
  switch (f) {
    case CompositionFailure::CoincidentPoints:
      return "CoincidentPoints";
    case CompositionFailure::LineOnSurface:
      return "LineOnSurface";
  }
  return "?";
}

AlphaBeta alpha_beta(const DiagonalSurface& s, const ProjPoint& a1, const ProjPoint& a2) {
  AlphaBeta ab{0, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    BigInt k(static_cast<long>(s.coefficient(i)));
    BigInt cross = k * a1[i] * a2[i];
    ab.alpha += cross * a2[i];
    ab.beta += cross * a1[i];
  }
  return ab;
}

CompositionOutcome compose(const DiagonalSurface& s, const ProjPoint& a1, const ProjPoint& a2) {
  if (a1 == a2) return CompositionFailure::CoincidentPoints;
  auto [alpha, beta] = alpha_beta(s, a1, a2);
  if (sgn(alpha) == 0 && sgn(beta) == 0) return CompositionFailure::LineOnSurface;
  std::array<BigInt, 4> raw;
  for (std::size_t i = 0; i < 4; ++i) raw[i] = alpha * a1[i] - beta * a2[i];
  return canonicalize(std::move(raw));
}

bool TangentPlane::contains(const ProjPoint& p) const {
  BigInt v = 0;
  for (std::size_t i = 0; i < 4; ++i) v += coeffs[i] * p[i];
  return sgn(v) == 0;
}

bool TangentPlane::contains(const SmallPoint& p) const {
  BigInt v = 0;
  for (std::size_t i = 0; i < 4; ++i) v += coeffs[i] * BigInt(static_cast<long>(p.c[i]));
  return sgn(v) == 0;
}

TangentPlane tangent_plane(const DiagonalSurface& s, const ProjPoint& p) {
  std::array<BigInt, 4> grad;
  for (std::size_t i = 0; i < 4; ++i) grad[i] = BigInt(static_cast<long>(s.coefficient(i))) * p[i] * p[i];
  // The gradient is never zero for P != 0, so canonicalize cannot throw here.
  return TangentPlane{canonicalize(std::move(grad)).coords()};
}

std::vector<ProjPoint> tangent_section_points(const DiagonalSurface& s, const ProjPoint& p,
                                              std::span<const ProjPoint> candidates) {
  const TangentPlane plane = tangent_plane(s, p);
  std::vector<ProjPoint> out;
  for (const auto& q : candidates) {
    if (q != p && plane.contains(q)) out.push_back(q);
  }
  return out;
}

}  // namespace cubic_mw
