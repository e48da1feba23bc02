#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cubic_mw/asymptotics.hpp"
#include "cubic_mw/composition.hpp"
#include "cubic_mw/enumeration.hpp"
#include "cubic_mw/errors.hpp"
#include "cubic_mw/point_index.hpp"
#include "cubic_mw/tgs.hpp"
#include "point_cache.hpp"

namespace cubic_mw::cli {

namespace {

constexpr std::int64_t kFirstGuess = 64;
// Auto-growth stops here; larger indices need an explicit --hsum.
constexpr std::int64_t kMaxAutoBound = 50000;

PointCache make_cache(const RunConfig& cfg) {
  if (cfg.no_cache) return PointCache({});
  return PointCache(cfg.cache_dir ? *cfg.cache_dir : default_cache_dir());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to " + path.string() + " failed");
}

PointIndex index_from(const ResolvedSurface& rs, PointList list, const ExclusionPolicy& policy) {
  std::erase_if(list.points, [&](const SmallPoint& p) { return !policy.admits(p); });
  return PointIndex(rs.surface, std::move(list.points), list.bound.value, policy);
}

/// An index whose complete prefix reaches `n`. With an explicit bound the
/// index is built at that bound as is, and TGS reports it if too small.
/// Otherwise the h_sum bound grows from the largest cached list (or a small
/// guess) by the observed point density until the prefix is long enough;
/// only the final list is cached.
PointIndex index_for(const ResolvedSurface& rs, const ExclusionPolicy& policy, PointCache& cache,
                     std::size_t n, std::optional<std::int64_t> hsum) {
  if (hsum) {
    return index_from(rs, cache.obtain(rs.label, rs.surface, HeightBound::sum(*hsum)), policy);
  }
  std::int64_t bound = kFirstGuess;
  if (auto stored = cache.largest(rs.label, rs.surface)) {
    PointIndex idx = index_from(rs, std::move(*stored), policy);
    if (idx.complete_prefix() >= n) return idx;
    bound = std::max(bound, idx.hsum_bound());
  }
  for (;;) {
    PointList list = enumerate_list(rs.label, rs.surface, HeightBound::sum(bound));
    PointIndex idx = index_from(rs, list, policy);
    const std::size_t have = idx.complete_prefix();
    if (have >= n) {
      cache.store(list);
      return idx;
    }
    const double want = have == 0 ? 4.0 : 1.15 * static_cast<double>(n) / static_cast<double>(have);
    const double factor = std::clamp(want, 1.25, 4.0);
    // Counts grow roughly linearly in the bound, so a request far past the
    // cap is refused without enumerating all the way up to it.
    const bool hopeless = have > 0 && static_cast<double>(n) / static_cast<double>(have) *
                                              static_cast<double>(bound) >
                                          4.0 * static_cast<double>(kMaxAutoBound);
    if (bound >= kMaxAutoBound || hopeless) {
      throw IndexTooSmall("index bound " + std::to_string(n) + " needs more than h_sum " +
                          std::to_string(kMaxAutoBound) + " (only " + std::to_string(have) +
                          " points); pass --hsum to go further");
    }
    bound = std::min(kMaxAutoBound,
                     static_cast<std::int64_t>(std::ceil(static_cast<double>(bound) * factor)));
  }
}

std::string set_text(const std::vector<std::size_t>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "}";
}

std::string points_text(const PointIndex& idx, const std::vector<std::size_t>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) s += ", ";
    s += idx.point(ids[i]).to_string();
  }
  return s + "}";
}

std::size_t max_index(const GeneratorSet& g) {
  std::size_t m = 0;
  for (std::size_t i : g.indices) m = std::max(m, i);
  return m;
}

}  // namespace

int cmd_enumerate(const RunConfig& cfg, const EnumerateArgs& args, std::ostream& out) {
  const ResolvedSurface rs = resolve_surface(cfg);
  const ExclusionPolicy policy = resolve_policy(cfg, rs, PolicyUse::Counting);
  PointCache cache = make_cache(cfg);
  const PointList list = cache.obtain(rs.label, rs.surface, HeightBound::max(args.hmax));
  if (cfg.out) save_point_list(*cfg.out, list);
  const auto count = std::count_if(list.points.begin(), list.points.end(),
                                   [&](const SmallPoint& p) { return policy.admits(p); });
  out << rs.label << " H=" << args.hmax << " count=" << count << '\n';
  return 0;
}

int cmd_tgs(const RunConfig& cfg, const TgsArgs& args, std::ostream& out) {
  const ResolvedSurface rs = resolve_surface(cfg);
  const ExclusionPolicy policy = resolve_policy(cfg, rs, PolicyUse::Indexing);
  const GeneratorSet g = parse_set(args.set);
  PointCache cache = make_cache(cfg);
  const PointIndex idx =
      index_for(rs, policy, cache, std::max(args.n, max_index(g)), args.hsum);
  const TGSReport report = test_generating_set(idx, g, args.n);
  out << format_table_row(report) << '\n';
  if (cfg.out) write_file(*cfg.out, report_to_json(report, rs.label, idx.hsum_bound()) + "\n");
  return 0;
}

int cmd_search(const RunConfig& cfg, const SearchArgs& args, std::ostream& out) {
  if (args.threshold <= 0.0 || args.threshold > 1.0) {
    throw PreconditionError("--threshold must lie in (0, 1]");
  }
  const ResolvedSurface rs = resolve_surface(cfg);
  const ExclusionPolicy policy = resolve_policy(cfg, rs, PolicyUse::Indexing);
  PointCache cache = make_cache(cfg);
  const PointIndex idx =
      index_for(rs, policy, cache, std::max(args.n_small, args.max_prefix), args.hsum);
  const auto found = greedy_initial_set(idx, args.n_small, args.threshold, args.max_prefix);
  std::ostringstream text;
  if (!found) {
    text << rs.label << " none found (n=" << args.n_small << ", threshold " << args.threshold
         << ")\n";
  } else {
    text << rs.label << " indices " << set_text(*found) << '\n';
    text << rs.label << " points " << points_text(idx, *found) << '\n';
  }
  out << text.str();
  if (cfg.out) write_file(*cfg.out, text.str());
  return 0;
}

int cmd_inject(const RunConfig& cfg, const InjectArgs& args, std::ostream& out) {
  const ResolvedSurface rs = resolve_surface(cfg);
  const ExclusionPolicy policy = resolve_policy(cfg, rs, PolicyUse::Indexing);
  const GeneratorSet g = parse_set(args.set);
  if (!g.extra_points.empty()) {
    throw PreconditionError("inject takes index sets only");
  }
  PointCache cache = make_cache(cfg);
  const PointIndex idx = index_for(rs, policy, cache, std::max(args.n, max_index(g)), args.hsum);
  const InjectionResult result = inject_bad_points(idx, g.indices, args.n, args.batch, args.rounds);
  std::ostringstream text;
  for (const auto& report : result.trace) text << format_table_row(report) << '\n';
  text << "set " << set_text(result.final_set) << '\n';
  out << text.str();
  if (cfg.out) write_file(*cfg.out, text.str());
  return 0;
}

int cmd_manin(const RunConfig& cfg, const ManinArgs& args, std::ostream& out) {
  const ResolvedSurface rs = resolve_surface(cfg);
  const ExclusionPolicy policy = resolve_policy(cfg, rs, PolicyUse::Counting);
  const auto heights = parse_int_list(args.heights);
  std::vector<ManinRow> rows;
  if (!heights.empty()) {
    // Validate before enumerating anything.
    manin_series(rs.surface, std::span<const SmallPoint>{}, heights);
    PointCache cache = make_cache(cfg);
    PointList list = cache.obtain(rs.label, rs.surface, HeightBound::max(heights.back()));
    std::erase_if(list.points, [&](const SmallPoint& p) { return !policy.admits(p); });
    rows = manin_series(rs.surface, list.points, heights);
  }
  std::ostringstream text;
  write_manin_csv(text, rows);
  if (cfg.out) {
    write_file(*cfg.out, text.str());
  } else {
    out << text.str();
  }
  return 0;
}

int cmd_stats(const RunConfig& cfg, const StatsArgs& args, std::ostream& out) {
  const ResolvedSurface rs = resolve_surface(cfg);
  const ExclusionPolicy policy = resolve_policy(cfg, rs, PolicyUse::Indexing);
  const auto bounds = parse_int_list(args.bounds);
  std::vector<DecomposabilityStat> rows;
  if (!bounds.empty()) {
    for (std::int64_t b : bounds) {
      if (b < 1) throw OutOfRange("decomposability bounds must be positive");
    }
    const auto top = static_cast<std::size_t>(*std::max_element(bounds.begin(), bounds.end()));
    PointCache cache = make_cache(cfg);
    const PointIndex idx = index_for(rs, policy, cache, top, args.hsum);
    if (top > idx.complete_prefix()) {
      throw IndexTooSmall("bound " + std::to_string(top) + " exceeds the complete prefix " +
                          std::to_string(idx.complete_prefix()) + " at h_sum " +
                          std::to_string(idx.hsum_bound()));
    }
    for (std::int64_t b : bounds) {
      rows.push_back(strong_decomposability(idx, static_cast<std::size_t>(b)));
    }
  }
  std::ostringstream text;
  write_decomposability_csv(text, rows);
  if (cfg.out) {
    write_file(*cfg.out, text.str());
  } else {
    out << text.str();
  }
  return 0;
}

int cmd_compose(const RunConfig& cfg, const ComposeArgs& args, std::ostream& out) {
  const ResolvedSurface rs = resolve_surface(cfg);
  const ProjPoint p = parse_point(args.p);
  const ProjPoint q = parse_point(args.q);
  for (const ProjPoint* pt : {&p, &q}) {
    if (!is_on_surface(rs.surface, *pt)) {
      throw PreconditionError(pt->to_string() + " is not on surface " + rs.label);
    }
  }
  const AlphaBeta ab = alpha_beta(rs.surface, p, q);
  const CompositionOutcome result = compose(rs.surface, p, q);
  out << "alpha=" << ab.alpha << '\n';
  out << "beta=" << ab.beta << '\n';
  if (result.ok()) {
    out << "result=" << result.point() << '\n';
  } else {
    out << "result=none (" << to_string(result.failure()) << ")\n";
  }
  return 0;
}

int cmd_seed_registry(const std::filesystem::path& path, std::ostream& out) {
  std::ostringstream text;
  SurfaceRegistry::builtin().write(text);
  write_file(path, text.str());
  out << "wrote " << SurfaceRegistry::builtin().size() << " surfaces to " << path.string() << '\n';
  return 0;
}

}  // namespace cubic_mw::cli
