#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cubic_mw/policy.hpp"
#include "cubic_mw/surface.hpp"

namespace cubic_mw {

struct RegistryEntry {
  std::string label;
  DiagonalSurface surface;
};

/// Named surfaces. The text form is one surface per line,
/// `label a b c d picard_rank`, with `#` starting a comment.
class SurfaceRegistry {
 public:
  SurfaceRegistry() = default;

  /// The thirteen diagonal surfaces studied for finite generation, labelled "1".."13".
  static SurfaceRegistry builtin();

  static SurfaceRegistry parse(std::istream& in);
  static SurfaceRegistry load(const std::filesystem::path& path);
  void write(std::ostream& out) const;

  /// Throws PreconditionError if the label is already taken.
  void add(std::string label, DiagonalSurface surface);

  const RegistryEntry* find(std::string_view label) const;
  /// Matches coefficients only; Picard rank is ignored.
  const RegistryEntry* find_by_coefficients(const std::array<std::int64_t, 4>& coeffs) const;
  /// Throws PreconditionError for unknown labels.
  const DiagonalSurface& at(std::string_view label) const;

  const std::vector<RegistryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<RegistryEntry> entries_;
};

/// Exclusion policy for indexing and generating-set work: none for surfaces
/// 1-6, trivial lines dropped except (1:-1:0:0) for 7-9, and except
/// (1:-1:0:0), (0:0:1:-1), (1:-1:1:-1), (1:-1:-1:1) for 10-13. The kept points
/// are needed as generators. Unknown labels get the empty policy.
ExclusionPolicy builtin_policy(std::string_view label);

/// Exclusion policy behind the published point counts: every trivial-line
/// point dropped on surfaces 7-13, nothing dropped elsewhere.
ExclusionPolicy counting_policy(std::string_view label);

}  // namespace cubic_mw
