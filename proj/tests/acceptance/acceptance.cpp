// Acceptance runner: one PASS/FAIL line per criterion 1-12.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsparse/verify/criteria.hpp"

namespace fs = std::filesystem;
using qsparse::verify::CriterionResult;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SmallRun {
  std::string command;
  nlohmann::json config;
};

std::vector<SmallRun> small_runs() {
  using J = nlohmann::json;
  const J opt = {{"steps", 5}};
  return {
      {"mincut-sweep", {{"ns", {8, 16}}}},
      {"weierstrass", {{"ns", {8, 10}}, {"a_values", {0.25, 0.96}}}},
      {"ksparse", {{"n", 6}, {"k_values", {1, 4, 16}}, {"samples", 5}}},
      {"qnsst", {{"n", 10}}},
      {"gradvar", {{"ns", {6}}, {"depths", {1, 2, 3}}, {"trials", 4}}},
      {"encode",
       {{"n", 6}, {"dtot", 8}, {"random_layers", 2}, {"trajectories", 2}, {"omega_block", 1},
        {"quantile_steps", {5}}, {"optimizer", opt}}},
      {"vqe",
       {{"lx", 2}, {"ly", 2}, {"dtot", 6}, {"random_layers", 2}, {"trajectories", 2},
        {"quantile_steps", {5}}, {"optimizer", opt}}},
      {"scaling",
       {{"ns", {2, 3}}, {"thresholds", {1e-1}}, {"max_layers", 3}, {"random_restarts", 1},
        {"optimizer", {{"steps", 50}}}}},
      {"selftest", {{"criteria", {2}}}},
  };
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + QSPARSE_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

// Each subcommand runs once from a small config and once from the first run's
// manifest, both single-threaded; every CSV must match byte for byte.
CriterionResult cli_reproducibility(const fs::path& work) {
  CriterionResult r{12, "CLI reproducibility from manifest", true, "", {}};
  std::ostringstream os;
  int identical = 0, total = 0;
  for (const auto& run : small_runs()) {
    const fs::path dir = work / run.command;
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "config.json") << run.config.dump(2);
    const int s1 = run_cli(run.command + " --config " + (dir / "config.json").string() + " --out " +
                           (dir / "a").string() + " --threads 1 --quiet");
    const int s2 = run_cli(run.command + " --config " + (dir / "a" / "manifest.json").string() + " --out " +
                           (dir / "b").string() + " --threads 1 --quiet");
    if (s1 != 0 || s2 != 0) {
      r.pass = false;
      os << run.command << " exit " << s1 << "/" << s2 << "; ";
      continue;
    }
    const auto files = nlohmann::json::parse(slurp(dir / "a" / "manifest.json"))["outputs"];
    bool same = !files.empty();
    for (const auto& f : files) {
      const std::string name = f.is_string() ? f.get<std::string>() : f["name"].get<std::string>();
      ++total;
      if (slurp(dir / "a" / name) == slurp(dir / "b" / name) && !slurp(dir / "a" / name).empty())
        ++identical;
      else
        same = false;
    }
    if (!same) {
      r.pass = false;
      os << run.command << " differs; ";
    }
  }
  os << identical << "/" << total << " CSV files byte-identical across " << small_runs().size() << " subcommands";
  r.detail = os.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsparse acceptance checks"};
  std::vector<int> only;
  int threads = 1;
  std::string work = (fs::temp_directory_path() / "qsparse_acceptance").string();
  app.add_option("--only", only, "criterion ids to run (default 1-12)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--work-dir", work, "scratch directory for CLI runs");
  CLI11_PARSE(app, argc, argv);
  if (only.empty())
    for (int i = 1; i <= 12; ++i) only.push_back(i);

  int failed = 0;
  for (int id : only) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = id == 12 ? cli_reproducibility(work) : qsparse::verify::run_criterion(id, {threads});
    if (id == 12) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s (%.1f s)\n", qsparse::verify::format_line(r).c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, only.size());
  return failed ? 1 : 0;
}
