#include "run_config.hpp"

#include <cstdlib>
#include <sstream>

#include "cubic_mw/errors.hpp"

namespace cubic_mw::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError(std::string("invalid ") + what + " `" + tok + "`");
  }
}

std::string coefficient_label(const std::array<std::int64_t, 4>& k) {
  return std::to_string(k[0]) + "_" + std::to_string(k[1]) + "_" + std::to_string(k[2]) + "_" +
         std::to_string(k[3]);
}

}  // namespace

SurfaceRegistry load_registry(const RunConfig& cfg) {
  if (cfg.registry_path) return SurfaceRegistry::load(*cfg.registry_path);
  return SurfaceRegistry::builtin();
}

ResolvedSurface resolve_surface(const RunConfig& cfg) {
  const bool has_label = cfg.label.has_value();
  const bool has_coeffs = !cfg.coeffs.empty();
  if (has_label == has_coeffs) {
    throw PreconditionError("give exactly one of --surface and --coeffs");
  }
  const SurfaceRegistry reg = load_registry(cfg);
  if (has_label) {
    const RegistryEntry* e = reg.find(*cfg.label);
    if (e == nullptr) throw PreconditionError("unknown surface label `" + *cfg.label + "`");
    return {e->label, e->surface, true};
  }
  if (cfg.coeffs.size() != 4) throw PreconditionError("--coeffs takes four integers");
  const std::array<std::int64_t, 4> k{cfg.coeffs[0], cfg.coeffs[1], cfg.coeffs[2], cfg.coeffs[3]};
  if (const RegistryEntry* e = reg.find_by_coefficients(k)) {
    return {e->label, e->surface, true};
  }
  return {coefficient_label(k), DiagonalSurface(k[0], k[1], k[2], k[3], cfg.rank), false};
}

ExclusionPolicy resolve_policy(const RunConfig& cfg, const ResolvedSurface& s, PolicyUse use) {
  if (cfg.no_exclusion) {
    if (cfg.exclude_trivial_lines || !cfg.keep.empty()) {
      throw PreconditionError("--no-exclusion conflicts with --exclude-trivial-lines/--keep");
    }
    return {};
  }
  if (cfg.exclude_trivial_lines || !cfg.keep.empty()) {
    if (!cfg.exclude_trivial_lines) throw PreconditionError("--keep needs --exclude-trivial-lines");
    std::vector<ProjPoint> keep;
    for (const auto& k : cfg.keep) keep.push_back(parse_point(k));
    return ExclusionPolicy::exclude_trivial_lines(std::move(keep));
  }
  if (!s.from_registry) return {};
  return use == PolicyUse::Counting ? counting_policy(s.label) : builtin_policy(s.label);
}

ProjPoint parse_point(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw PreconditionError("unbalanced point `" + text + "`");
    t = t.substr(1, t.size() - 2);
  }
  for (char& ch : t) {
    if (ch == ':') ch = ' ';
  }
  std::istringstream in(t);
  std::array<std::int64_t, 4> v{};
  std::string tok;
  std::size_t count = 0;
  while (in >> tok) {
    if (count == 4) throw PreconditionError("point `" + text + "` has more than 4 coordinates");
    v[count++] = parse_int(tok, "coordinate");
  }
  if (count != 4) throw PreconditionError("point `" + text + "` needs 4 coordinates");
  return canonicalize(v[0], v[1], v[2], v[3]);
}

GeneratorSet parse_set(const std::string& text) {
  GeneratorSet g;
  if (trim(text).empty()) return g;
  std::string tok;
  int depth = 0;
  auto flush = [&] {
    const std::string t = trim(tok);
    tok.clear();
    if (t.empty()) throw PreconditionError("empty entry in set `" + text + "`");
    if (t.find_first_of("(: ") != std::string::npos) {
      g.extra_points.push_back(parse_point(t));
      return;
    }
    const std::int64_t i = parse_int(t, "index");
    if (i < 1) throw PreconditionError("indices start at 1, got " + t);
    g.indices.push_back(static_cast<std::size_t>(i));
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
    } else {
      tok += ch;
    }
  }
  flush();
  return g;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  std::stringstream in(text + ",");
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) throw PreconditionError("empty entry in list `" + text + "`");
    const std::int64_t v = parse_int(tok, "number");
    if (v < 1) throw PreconditionError("expected a positive number, got " + tok);
    out.push_back(v);
  }
  return out;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("CUBIC_MW_CACHE"); env != nullptr && *env != '\0') return env;
  return ".cubic_mw_cache";
}

}  // namespace cubic_mw::cli
