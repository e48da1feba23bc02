#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cubic_mw/policy.hpp"
#include "cubic_mw/registry.hpp"
#include "cubic_mw/surface.hpp"
#include "cubic_mw/tgs.hpp"

namespace cubic_mw::cli {

/// Options shared by every command, before resolution against the registry.
struct RunConfig {
  std::optional<std::string> label;
  std::vector<std::int64_t> coeffs;
  int rank = 1;
  std::optional<std::filesystem::path> registry_path;

  bool exclude_trivial_lines = false;
  bool no_exclusion = false;
  std::vector<std::string> keep;

  std::optional<std::filesystem::path> cache_dir;
  bool no_cache = false;
  std::optional<std::filesystem::path> out;
};

/// The surface a command runs on. Explicit coefficients that match a registry
/// entry take that entry's label, rank and default policies.
struct ResolvedSurface {
  std::string label;
  DiagonalSurface surface;
  bool from_registry;
};

SurfaceRegistry load_registry(const RunConfig& cfg);
ResolvedSurface resolve_surface(const RunConfig& cfg);

enum class PolicyUse { Counting, Indexing };

/// Explicit flags win; otherwise registry surfaces get their counting or
/// indexing policy and other surfaces get no exclusion.
ExclusionPolicy resolve_policy(const RunConfig& cfg, const ResolvedSurface& s, PolicyUse use);

/// "x y z u", "x:y:z:u" or "(x:y:z:u)"; canonicalized.
ProjPoint parse_point(const std::string& text);

/// Comma separated indices and literal points, e.g. "1,2,4" or "3,(1:4:-2:-1)".
/// An empty string is the empty set.
GeneratorSet parse_set(const std::string& text);

/// Comma separated positive integers; empty string gives an empty list.
std::vector<std::int64_t> parse_int_list(const std::string& text);

std::filesystem::path default_cache_dir();

}  // namespace cubic_mw::cli
