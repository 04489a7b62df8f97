#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsparse/cli/commands.hpp"
#include "qsparse/cli/config.hpp"
#include "qsparse/cli/output.hpp"
#include "qsparse/cli/stats.hpp"
#include "qsparse/core/errors.hpp"

using namespace qsparse;
using namespace qsparse::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qsparse_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("config sections record effective values and reject unknown keys") {
  Json src = {{"a", 2}, {"b", {{"c", 1.5}}}, {"typo", true}};
  Json eff = Json::object();
  ConfigSection s(src, eff, "");
  CHECK(s.get<int>("a", 0) == 2);
  CHECK(s.get<int>("missing", 7) == 7);
  ConfigSection b = s.section("b");
  CHECK(b.get<double>("c", 0.0) == 1.5);
  b.finish();
  CHECK(eff["missing"] == 7);
  CHECK(eff["b"]["c"] == 1.5);
  CHECK_THROWS_AS(s.finish(), ParseError);
}

TEST_CASE("config type errors") {
  Json src = {{"n", "nine"}, {"k", -3}, {"x", 1.5}};
  Json eff = Json::object();
  ConfigSection s(src, eff, "");
  CHECK_THROWS_AS(s.get<int>("n", 0), ParseError);
  CHECK_THROWS_AS(s.get<std::uint64_t>("k", 0), ParseError);
  CHECK_THROWS_AS(s.get<int>("x", 0), ParseError);
  CHECK_THROWS_AS(s.required<double>("absent"), ParseError);
}

TEST_CASE("unknown keys are rejected before any compute") {
  const fs::path out = scratch("unknown");
  RunOptions o;
  o.out_dir = out;
  o.quiet = true;
  CHECK_THROWS_AS(run_command("mincut-sweep", {{"ns", {8}}, {"bogus", 1}}, o), ParseError);
  CHECK_FALSE(fs::exists(out / "mincut_tee.csv"));
  CHECK_THROWS_AS(run_command("mincut-sweep", {{"experiment", "vqe"}}, o), ParseError);
  CHECK_THROWS(run_command("no-such-command", Json::object(), o));
}

TEST_CASE("manifest round trip reproduces CSV bytes") {
  const fs::path a = scratch("rt_a"), b = scratch("rt_b");
  RunOptions o;
  o.out_dir = a;
  o.quiet = true;
  const ResultBundle first = run_command("ksparse", {{"n", 6}, {"k_values", {1, 4, 16}}, {"samples", 4}}, o);
  const Json manifest = Json::parse(slurp(a / "manifest.json"));
  CHECK(manifest["command"] == "ksparse");
  CHECK(manifest.contains("manifest_version"));
  o.out_dir = b;
  o.threads = 3;
  const ResultBundle second = run_command("ksparse", load_config_file((a / "manifest.json").string(), "ksparse"), o);
  REQUIRE(first.files == second.files);
  for (const auto& f : first.files) CHECK(slurp(a / f) == slurp(b / f));
  CHECK_THROWS_AS(load_config_file((a / "manifest.json").string(), "vqe"), ParseError);
}

TEST_CASE("config file parse errors") {
  const fs::path dir = scratch("parse");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.json") << "{ not json";
  CHECK_THROWS_AS(load_config_file((dir / "bad.json").string(), "qnsst"), ParseError);
  CHECK_THROWS_AS(load_config_file((dir / "absent.json").string(), "qnsst"), Error);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.0}) CHECK(std::stod(format_number(v)) == v);
  CHECK(format_number(NAN) == "nan");
  CsvWriter w({"a", "b"});
  CHECK_THROWS(w.row({"1"}));
}

TEST_CASE("statistics helpers") {
  const std::vector<double> v{1, 2, 3, 4};
  CHECK(quantile(v, 0.5) == doctest::Approx(2.5));
  CHECK(quantile(v, 0.0) == 1);
  CHECK(quantile(v, 1.0) == 4);
  const auto ms = mean_stderr({1, 2, 3, 4});
  CHECK(ms.mean == 2.5);
  CHECK(ms.stderr_ == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(least_squares_slope({1, 2, 3}, {2, 4, 6}) == doctest::Approx(2.0));
}

TEST_CASE("mincut sweep output") {
  const fs::path out = scratch("mincut");
  RunOptions o;
  o.out_dir = out;
  o.quiet = true;
  const ResultBundle b = run_command("mincut-sweep", {{"ns", {8, 16}}}, o);
  const std::string csv = slurp(out / "mincut_tee.csv");
  CHECK(csv.rfind("n,depth,tee0_cuts,tee0_nats\n", 0) == 0);
  CHECK(bundle_status(b) == 0);
}
