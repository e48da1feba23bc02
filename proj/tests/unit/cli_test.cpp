#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/point_cache.hpp"
#include "cli/run_config.hpp"
#include "cubic_mw/errors.hpp"
#include "cubic_mw/point_list_io.hpp"

using namespace cubic_mw;
using namespace cubic_mw::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cubic_mw_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

RunConfig on_surface(const std::string& label) {
  RunConfig cfg;
  cfg.label = label;
  cfg.no_cache = true;
  return cfg;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(CUBIC_MW_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(CliParse, Points) {
  EXPECT_EQ(parse_point("2 -4 0 6").to_string(), "(1:-2:0:3)");
  EXPECT_EQ(parse_point("1:-1:-1:1").to_string(), "(1:-1:-1:1)");
  EXPECT_EQ(parse_point("(-1:1:1:-1)").to_string(), "(1:-1:-1:1)");
  EXPECT_THROW(parse_point("1 2 3"), PreconditionError);
  EXPECT_THROW(parse_point("0 0 0 0"), PreconditionError);
  EXPECT_THROW(parse_point("1 2 x 4"), PreconditionError);
}

TEST(CliParse, Sets) {
  EXPECT_TRUE(parse_set("").indices.empty());
  EXPECT_EQ(parse_set("1,2,4").indices, (std::vector<std::size_t>{1, 2, 4}));
  const auto mixed = parse_set("3,(1:4:-2:-1), 7");
  EXPECT_EQ(mixed.indices, (std::vector<std::size_t>{3, 7}));
  ASSERT_EQ(mixed.extra_points.size(), 1u);
  EXPECT_EQ(mixed.extra_points[0].to_string(), "(1:4:-2:-1)");
  EXPECT_THROW(parse_set("0"), PreconditionError);
  EXPECT_THROW(parse_set("1,,2"), PreconditionError);
  EXPECT_THROW(parse_set("abc"), PreconditionError);
}

TEST(CliParse, IntLists) {
  EXPECT_TRUE(parse_int_list("").empty());
  EXPECT_EQ(parse_int_list("100, 200,500"), (std::vector<std::int64_t>{100, 200, 500}));
  EXPECT_THROW(parse_int_list("100,-5"), PreconditionError);
}

TEST(CliResolve, SurfaceByLabelOrCoefficients) {
  RunConfig cfg;
  cfg.coeffs = {1, 1, 2, 2};
  const auto rs = resolve_surface(cfg);
  EXPECT_EQ(rs.label, "10");
  EXPECT_TRUE(rs.from_registry);
  cfg.coeffs = {1, 2, 3, 7};
  EXPECT_EQ(resolve_surface(cfg).label, "1_2_3_7");
  EXPECT_FALSE(resolve_surface(cfg).from_registry);
  cfg.label = "1";
  EXPECT_THROW(resolve_surface(cfg), PreconditionError);
  EXPECT_THROW(resolve_surface(RunConfig{}), PreconditionError);
  EXPECT_THROW(resolve_surface(on_surface("99")), PreconditionError);
}

TEST(CliResolve, Policies) {
  const auto rs = resolve_surface(on_surface("10"));
  RunConfig cfg = on_surface("10");
  EXPECT_TRUE(resolve_policy(cfg, rs, PolicyUse::Counting).keep_list().empty());
  EXPECT_EQ(resolve_policy(cfg, rs, PolicyUse::Indexing).keep_list().size(), 4u);
  cfg.no_exclusion = true;
  EXPECT_FALSE(resolve_policy(cfg, rs, PolicyUse::Counting).excludes_trivial_lines());
  cfg.keep = {"1 -1 0 0"};
  EXPECT_THROW(resolve_policy(cfg, rs, PolicyUse::Counting), PreconditionError);
  cfg.no_exclusion = false;
  EXPECT_THROW(resolve_policy(cfg, rs, PolicyUse::Counting), PreconditionError);
  cfg.exclude_trivial_lines = true;
  EXPECT_EQ(resolve_policy(cfg, rs, PolicyUse::Counting).keep_list().size(), 1u);
}

TEST(CliCommands, Enumerate) {
  std::ostringstream out;
  cmd_enumerate(on_surface("1"), {100}, out);
  EXPECT_EQ(out.str(), "1 H=100 count=77\n");

  RunConfig by_coeffs;
  by_coeffs.coeffs = {1, 2, 3, 4};
  by_coeffs.no_cache = true;
  out.str("");
  cmd_enumerate(by_coeffs, {100}, out);
  EXPECT_EQ(out.str(), "1 H=100 count=77\n");

  out.str("");
  cmd_enumerate(on_surface("10"), {100}, out);
  EXPECT_EQ(out.str(), "10 H=100 count=666\n");

  RunConfig keeps = on_surface("10");
  keeps.exclude_trivial_lines = true;
  keeps.keep = {"1 -1 0 0", "0 0 1 -1", "1 -1 1 -1", "1 -1 -1 1"};
  out.str("");
  cmd_enumerate(keeps, {100}, out);
  EXPECT_EQ(out.str(), "10 H=100 count=670\n");
}

TEST(CliCommands, TgsSearchInject) {
  std::ostringstream out;
  cmd_tgs(on_surface("1"), {"3", 100, std::nullopt}, out);
  EXPECT_EQ(out.str(), "317 100 74 74.0 4 30 86\n");

  out.str("");
  cmd_tgs(on_surface("1"), {"(1:-1:-1:1)", 100, std::nullopt}, out);
  EXPECT_EQ(out.str(), "317 100 74 74.0 4 30 86\n");

  out.str("");
  EXPECT_THROW(cmd_tgs(on_surface("1"), {"3", 100, 200}, out), IndexTooSmall);

  out.str("");
  cmd_search(on_surface("1"), SearchArgs{}, out);
  EXPECT_EQ(out.str(), "1 indices {3}\n1 points {(1:-1:-1:1)}\n");

  out.str("");
  cmd_inject(on_surface("1"), {"3", 100, 1, 1, std::nullopt}, out);
  EXPECT_EQ(out.str().substr(0, 24), "317 100 74 74.0 4 30 86\n");
  EXPECT_NE(out.str().find("set {3,30}\n"), std::string::npos);
}

TEST(CliCommands, ManinStatsCompose) {
  std::ostringstream out;
  cmd_manin(on_surface("1"), {"100,200"}, out);
  EXPECT_EQ(out.str(), "H,count,ratio\n100,77,0.77\n200,163,0.815\n");

  out.str("");
  cmd_manin(on_surface("1"), {""}, out);
  EXPECT_EQ(out.str(), "H,count,ratio\n");

  out.str("");
  cmd_stats(on_surface("1"), {"1", std::nullopt}, out);
  EXPECT_EQ(out.str(), "N,decomposable,fraction\n1,0,0\n");

  out.str("");
  cmd_compose(on_surface("2"), {"0 1 1 -1", "1 1 -1 0"}, out);
  EXPECT_EQ(out.str(), "alpha=5\nbeta=-1\nresult=(1:6:4:-5)\n");

  out.str("");
  cmd_compose(on_surface("10"), {"1 -1 0 0", "0 0 1 -1"}, out);
  EXPECT_NE(out.str().find("result=none (LineOnSurface)"), std::string::npos);
  EXPECT_THROW(cmd_compose(on_surface("1"), {"1 1 1 1", "1 -1 -1 1"}, out), PreconditionError);
}

TEST(CliCache, ReusesCoveringLists) {
  const auto dir = scratch("cache");
  const auto s = SurfaceRegistry::builtin().at("2");
  PointCache cache(dir);
  const PointList big = cache.obtain("2", s, HeightBound::sum(300));
  ASSERT_TRUE(std::filesystem::exists(cache.path_for(s, HeightBound::sum(300))));

  // Served from the stored list and cut to the request.
  const PointList small = cache.obtain("2", s, HeightBound::sum(120));
  EXPECT_FALSE(std::filesystem::exists(cache.path_for(s, HeightBound::sum(120))));
  EXPECT_EQ(small.points, enumerate_list("2", s, HeightBound::sum(120)).points);
  const PointList boxed = cache.obtain("2", s, HeightBound::max(70));
  EXPECT_EQ(boxed.points, enumerate_list("2", s, HeightBound::max(70)).points);

  ASSERT_TRUE(cache.largest("2", s).has_value());
  EXPECT_EQ(cache.largest("2", s)->bound, HeightBound::sum(300));

  // A damaged file is skipped rather than trusted.
  std::ofstream(cache.path_for(s, HeightBound::sum(500))) << "garbage\n";
  const PointList again = cache.obtain("2", s, HeightBound::sum(150), false);
  EXPECT_EQ(again.points, enumerate_list("2", s, HeightBound::sum(150)).points);
  std::filesystem::remove_all(dir);
}

TEST(CliBinary, ExitCodes) {
  const auto dir = scratch("exit");
  const std::string cache = " --cache-dir " + (dir / "c").string();
  EXPECT_EQ(run_binary("enumerate --surface 1 --hmax 50" + cache), 0);
  EXPECT_EQ(run_binary("enumerate --surface 99 --hmax 50" + cache), 2);
  EXPECT_EQ(run_binary("enumerate --surface 1" + cache), 2);
  EXPECT_EQ(run_binary("tgs --surface 1 --set 3 --n 100 --hsum 50" + cache), 2);
  EXPECT_EQ(run_binary("compose --surface 1 --p '1 1 1 1' --q '1 -1 -1 1'" + cache), 2);
  EXPECT_EQ(run_binary("enumerate --surface 1 --hmax 50 --registry /nonexistent/reg.txt" + cache),
            3);
  EXPECT_EQ(run_binary("enumerate --surface 1 --hmax 50 --out /proc/no/such/dir.pts" + cache), 3);
  std::filesystem::remove_all(dir);
}

TEST(CliBinary, SeedRegistry) {
  const auto dir = scratch("seed");
  const auto path = dir / "registry.txt";
  EXPECT_EQ(run_binary("--seed-registry " + path.string()), 0);
  EXPECT_EQ(SurfaceRegistry::load(path).size(), 13u);
  // A seeded registry drives commands like the built-in one.
  EXPECT_EQ(run_binary("enumerate --surface 13 --hmax 20 --no-cache --registry " + path.string()),
            0);
  std::filesystem::remove_all(dir);
}
