#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "run_config.hpp"

namespace cubic_mw::cli {

struct EnumerateArgs {
  std::int64_t hmax = 0;
};

struct TgsArgs {
  std::string set;
  std::size_t n = 0;
  std::optional<std::int64_t> hsum;
};

struct SearchArgs {
  std::size_t n_small = 200;
  double threshold = 0.80;
  std::size_t max_prefix = 12;
  std::optional<std::int64_t> hsum;
};

struct InjectArgs {
  std::string set;
  std::size_t n = 0;
  std::size_t batch = 1;
  std::size_t rounds = 0;
  std::optional<std::int64_t> hsum;
};

struct ManinArgs {
  std::string heights = "100,200,500,1000,2000";
};

struct StatsArgs {
  std::string bounds;
  std::optional<std::int64_t> hsum;
};

struct ComposeArgs {
  std::string p;
  std::string q;
};

// Each command prints its summary to `out` and returns the process exit code.
// Library errors propagate as exceptions.
int cmd_enumerate(const RunConfig& cfg, const EnumerateArgs& args, std::ostream& out);
int cmd_tgs(const RunConfig& cfg, const TgsArgs& args, std::ostream& out);
int cmd_search(const RunConfig& cfg, const SearchArgs& args, std::ostream& out);
int cmd_inject(const RunConfig& cfg, const InjectArgs& args, std::ostream& out);
int cmd_manin(const RunConfig& cfg, const ManinArgs& args, std::ostream& out);
int cmd_stats(const RunConfig& cfg, const StatsArgs& args, std::ostream& out);
int cmd_compose(const RunConfig& cfg, const ComposeArgs& args, std::ostream& out);

/// Writes the registry text form; the file lists all built-in surfaces.
int cmd_seed_registry(const std::filesystem::path& path, std::ostream& out);

}  // namespace cubic_mw::cli
