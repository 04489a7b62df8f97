#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qsparse/cli/config.hpp"

namespace qsparse::cli {

/// Shortest round-trip decimal form ("%.17g"), "nan"/"inf" for non-finite.
std::string format_number(double v);

/// CSV table with a header row; cells are written as given.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  CsvWriter& row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string cell(double v);
std::string cell(int v);
std::string cell(long v);
std::string cell(long long v);
std::string cell(unsigned long v);
std::string cell(unsigned long long v);
std::string cell(const std::string& v);
std::string cell(const char* v);

struct RunOptions {
  std::filesystem::path out_dir;
  int threads = 1;
  std::string data_path;  ///< optional --data override
  bool quiet = false;
};

/// Files written by one subcommand plus its manifest.
struct ResultBundle {
  std::string command;
  std::filesystem::path out_dir;
  std::vector<std::string> files;  ///< CSV names relative to out_dir
  Json config;                     ///< effective config (defaults filled in)
  Json derived = Json::object();   ///< baselines and summary numbers
  Json wall_seconds = Json::object();

  /// Writes `table` to out_dir/name and records it; `name` must be a plain file name.
  void add_csv(const std::string& name, const CsvWriter& table);
  Json manifest(int threads) const;
  void write_manifest(int threads) const;
};

/// Version string baked in at configure time (git describe).
const char* version_string();

}  // namespace qsparse::cli
