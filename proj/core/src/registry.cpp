#include "cubic_mw/registry.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cubic_mw/errors.hpp"

namespace cubic_mw {

SurfaceRegistry SurfaceRegistry::builtin() {
  SurfaceRegistry r;
  // Picard rank 1
  r.add("1", DiagonalSurface(1, 2, 3, 4, 1));
  r.add("2", DiagonalSurface(1, 2, 3, 5, 1));
  r.add("3", DiagonalSurface(17, 18, 19, 20, 1));
  r.add("4", DiagonalSurface(4, 5, 6, 7, 1));
  r.add("5", DiagonalSurface(9, 10, 11, 12, 1));
  r.add("6", DiagonalSurface(1, 5, 6, 10, 1));
  // Picard rank 2
  r.add("7", DiagonalSurface(1, 1, 2, 4, 2));
  r.add("8", DiagonalSurface(1, 1, 5, 25, 2));
  r.add("9", DiagonalSurface(1, 1, 3, 9, 2));
  // Picard rank 3
  r.add("10", DiagonalSurface(1, 1, 2, 2, 3));
  r.add("11", DiagonalSurface(1, 1, 5, 5, 3));
  r.add("12", DiagonalSurface(1, 1, 7, 7, 3));
  r.add("13", DiagonalSurface(2, 2, 3, 3, 3));
  return r;
}

SurfaceRegistry SurfaceRegistry::parse(std::istream& in) {
  SurfaceRegistry r;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string label;
    if (!(fields >> label)) continue;
    std::int64_t a, b, c, d;
    int rank;
    if (!(fields >> a >> b >> c >> d >> rank)) {
      throw PreconditionError("registry line " + std::to_string(line_no) +
                              ": expected `label a b c d picard_rank`");
    }
    std::string extra;
    if (fields >> extra) {
      throw PreconditionError("registry line " + std::to_string(line_no) + ": trailing field");
    }
    r.add(std::move(label), DiagonalSurface(a, b, c, d, rank));
  }
  return r;
}

SurfaceRegistry SurfaceRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open registry file " + path.string());
  return parse(in);
}

void SurfaceRegistry::write(std::ostream& out) const {
  out << "# label a b c d picard_rank\n";
  for (const auto& e : entries_) {
    const auto& s = e.surface;
    out << e.label << ' ' << s.a() << ' ' << s.b() << ' ' << s.c() << ' ' << s.d() << ' '
        << s.picard_rank() << '\n';
  }
}

void SurfaceRegistry::add(std::string label, DiagonalSurface surface) {
  if (find(label) != nullptr) throw PreconditionError("duplicate surface label " + label);
  entries_.push_back({std::move(label), surface});
}

const RegistryEntry* SurfaceRegistry::find(std::string_view label) const {
  for (const auto& e : entries_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

const RegistryEntry* SurfaceRegistry::find_by_coefficients(
    const std::array<std::int64_t, 4>& coeffs) const {
  for (const auto& e : entries_) {
    if (e.surface.coefficients() == coeffs) return &e;
  }
  return nullptr;
}

const DiagonalSurface& SurfaceRegistry::at(std::string_view label) const {
  const auto* e = find(label);
  if (e == nullptr) throw PreconditionError("unknown surface label " + std::string(label));
  return e->surface;
}

ExclusionPolicy builtin_policy(std::string_view label) {
  if (label == "7" || label == "8" || label == "9") {
    return ExclusionPolicy::exclude_trivial_lines({canonicalize(1, -1, 0, 0)});
  }
  if (label == "10" || label == "11" || label == "12" || label == "13") {
    return ExclusionPolicy::exclude_trivial_lines(
        {canonicalize(1, -1, 0, 0), canonicalize(0, 0, 1, -1), canonicalize(1, -1, 1, -1),
         canonicalize(1, -1, -1, 1)});
  }
  return {};
}

ExclusionPolicy counting_policy(std::string_view label) {
  static constexpr std::string_view kLined[] = {"7", "8", "9", "10", "11", "12", "13"};
  for (auto l : kLined) {
    if (label == l) return ExclusionPolicy::exclude_trivial_lines();
  }
  return {};
}

}  // namespace cubic_mw
