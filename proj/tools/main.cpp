#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "qsparse/cli/commands.hpp"
#include "qsparse/cli/config.hpp"
#include "qsparse/core/errors.hpp"

namespace {

const char* kEnvHelp =
    "Environment:\n"
    "  QSPARSE_OUT_DIR   output directory when --out is not given\n"
    "  QSPARSE_THREADS   worker threads when --threads is not given\n"
    "Every run writes CSV files and manifest.json; passing a manifest back via\n"
    "--config reproduces the run.\n";

}  // namespace

int main(int argc, char** argv) {
  using namespace qsparse;
  CLI::App app{"qsparse: entanglement-sparsity experiments on simulated qubit registers"};
  app.footer(kEnvHelp);
  app.set_version_flag("--version", cli::version_string());
  app.require_subcommand(1);

  struct Args {
    std::string config, out, data;
    int threads = 0;
    bool quiet = false;
  };
  Args args;
  std::string chosen;
  for (const auto& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, cli::command_summary(name));
    sub->add_option("-c,--config", args.config, "JSON config or manifest.json of an earlier run")
        ->check(CLI::ExistingFile);
    sub->add_option("-o,--out", args.out, "output directory")->envname("QSPARSE_OUT_DIR");
    sub->add_option("-t,--threads", args.threads, "worker threads (results do not depend on it)")
        ->envname("QSPARSE_THREADS")
        ->check(CLI::PositiveNumber);
    if (name == "encode") sub->add_option("--data", args.data, "scalar-field target file (CSV or raw little-endian float64)");
    sub->add_flag("-q,--quiet", args.quiet, "suppress progress output");
    sub->callback([&chosen, name] { chosen = name; });
  }
  CLI11_PARSE(app, argc, argv);

  try {
    cli::Json config = cli::Json::object();
    if (!args.config.empty()) config = cli::load_config_file(args.config, chosen);
    cli::RunOptions opts;
    opts.out_dir = args.out;
    opts.threads = args.threads > 0 ? args.threads : 1;
    opts.data_path = args.data;
    opts.quiet = args.quiet;
    const cli::ResultBundle bundle = cli::run_command(chosen, config, opts);
    if (!args.quiet) std::fprintf(stderr, "wrote %s\n", (bundle.out_dir / "manifest.json").string().c_str());
    return cli::bundle_status(bundle);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "qsparse %s: config error: %s\n", chosen.c_str(), e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qsparse %s: error: %s\n", chosen.c_str(), e.what());
    return 1;
  }
}
