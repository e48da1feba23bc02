// cubic-mw: point enumeration, secant descent and point statistics on
// diagonal cubic surfaces.

#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cubic_mw/errors.hpp"

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

using cubic_mw::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg) {
  auto* label = cmd->add_option("--surface", cfg.label, "Registry label of the surface");
  auto* coeffs = cmd->add_option("--coeffs", cfg.coeffs, "Coefficients a b c d")->expected(4);
  label->excludes(coeffs);
  cmd->add_option("--rank", cfg.rank, "Picard rank for --coeffs surfaces outside the registry")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--registry", cfg.registry_path, "Registry file (default: built-in surfaces)");
  cmd->add_flag("--exclude-trivial-lines", cfg.exclude_trivial_lines,
                "Drop points (x:-x:z:-z) except --keep points");
  cmd->add_option("--keep", cfg.keep, "Trivial-line point to keep, \"x y z u\"");
  cmd->add_flag("--no-exclusion", cfg.no_exclusion, "Keep every point, overriding defaults");
  cmd->add_option("--cache-dir", cfg.cache_dir,
                  "Point-list cache (default $CUBIC_MW_CACHE or .cubic_mw_cache)");
  cmd->add_flag("--no-cache", cfg.no_cache, "Neither read nor write the point-list cache");
  cmd->add_option("--out", cfg.out, "Output file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points and secant descent on diagonal cubic surfaces"};
  app.require_subcommand(0, 1);

  std::optional<std::filesystem::path> seed_path;
  app.add_option("--seed-registry", seed_path, "Write the built-in surface registry to a file");

  RunConfig cfg;

  cubic_mw::cli::EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate points with h_max <= H");
  add_common(enumerate, cfg);
  enumerate->add_option("--hmax", enum_args.hmax, "Height bound H")->required()->check(
      CLI::PositiveNumber);

  cubic_mw::cli::TgsArgs tgs_args;
  auto* tgs = app.add_subcommand("tgs", "Test a generating set on the first n points");
  add_common(tgs, cfg);
  tgs->add_option("--set", tgs_args.set, "Indices and/or points, comma separated")->required();
  tgs->add_option("--n", tgs_args.n, "Index bound")->required()->check(CLI::PositiveNumber);
  tgs->add_option("--hsum", tgs_args.hsum, "h_sum bound of the index (default: grow as needed)");

  cubic_mw::cli::SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Look for a small generating set");
  add_common(search, cfg);
  search->add_option("--n-small", search_args.n_small, "Index bound for trial runs")
      ->capture_default_str();
  search->add_option("--threshold", search_args.threshold, "Fraction a trial set must generate")
      ->capture_default_str();
  search->add_option("--max-prefix", search_args.max_prefix, "Largest prefix {1..k} tried")
      ->capture_default_str();
  search->add_option("--hsum", search_args.hsum, "h_sum bound of the index");

  cubic_mw::cli::InjectArgs inject_args;
  auto* inject = app.add_subcommand("inject", "Add first bad points to a set round by round");
  add_common(inject, cfg);
  inject->add_option("--set", inject_args.set, "Initial indices, comma separated")->required();
  inject->add_option("--n", inject_args.n, "Index bound")->required()->check(CLI::PositiveNumber);
  inject->add_option("--batch", inject_args.batch, "Bad points added per round")
      ->capture_default_str();
  inject->add_option("--rounds", inject_args.rounds, "Number of injection rounds")
      ->capture_default_str();
  inject->add_option("--hsum", inject_args.hsum, "h_sum bound of the index");

  cubic_mw::cli::ManinArgs manin_args;
  auto* manin = app.add_subcommand("manin", "Point counts against H log(H)^(rank-1)");
  add_common(manin, cfg);
  manin->add_option("--heights", manin_args.heights, "Ascending h_max bounds, comma separated")
      ->capture_default_str();

  cubic_mw::cli::StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Strong decomposability of the first N points");
  add_common(stats, cfg);
  stats->add_option("--bounds", stats_args.bounds, "Index bounds N, comma separated")->required();
  stats->add_option("--hsum", stats_args.hsum, "h_sum bound of the index");

  cubic_mw::cli::ComposeArgs compose_args;
  auto* compose = app.add_subcommand("compose", "Third point on the line through two points");
  add_common(compose, cfg);
  compose->add_option("--p", compose_args.p, "First point \"x y z u\"")->required();
  compose->add_option("--q", compose_args.q, "Second point \"x y z u\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (seed_path) cubic_mw::cli::cmd_seed_registry(*seed_path, std::cout);
    if (enumerate->parsed()) return cubic_mw::cli::cmd_enumerate(cfg, enum_args, std::cout);
    if (tgs->parsed()) return cubic_mw::cli::cmd_tgs(cfg, tgs_args, std::cout);
    if (search->parsed()) return cubic_mw::cli::cmd_search(cfg, search_args, std::cout);
    if (inject->parsed()) return cubic_mw::cli::cmd_inject(cfg, inject_args, std::cout);
    if (manin->parsed()) return cubic_mw::cli::cmd_manin(cfg, manin_args, std::cout);
    if (stats->parsed()) return cubic_mw::cli::cmd_stats(cfg, stats_args, std::cout);
    if (compose->parsed()) return cubic_mw::cli::cmd_compose(cfg, compose_args, std::cout);
    if (!seed_path) {
      std::cout << app.help();
      return kExitPrecondition;
    }
    return 0;
  } catch (const cubic_mw::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const cubic_mw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
