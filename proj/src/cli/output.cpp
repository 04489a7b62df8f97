#include "qsparse/cli/output.hpp"

#include <cmath>
#include <cstdio>

#include "qsparse/core/errors.hpp"

#ifndef QSPARSE_GIT_DESCRIBE
#define QSPARSE_GIT_DESCRIBE "unknown"
#endif

namespace qsparse::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell(double v) { return format_number(v); }
std::string cell(int v) { return std::to_string(v); }
std::string cell(long v) { return std::to_string(v); }
std::string cell(long long v) { return std::to_string(v); }
std::string cell(unsigned long v) { return std::to_string(v); }
std::string cell(unsigned long long v) { return std::to_string(v); }
std::string cell(const std::string& v) { return v; }
std::string cell(const char* v) { return v; }

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

CsvWriter& CsvWriter::row(std::vector<std::string> cells) {
  require(cells.size() == columns_.size(), "CSV row width does not match the header");
  rows_.push_back(std::move(cells));
  return *this;
}

void CsvWriter::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(columns_);
  for (const auto& r : rows_) line(r);
  if (!out) throw Error("write failed for " + path.string());
}

void ResultBundle::add_csv(const std::string& name, const CsvWriter& table) {
  const std::filesystem::path p(name);
  require(p.has_filename() && p.filename() == p && name != "." && name != "..",
          "output file name must not contain directories: " + name);
  table.write(out_dir / p);
  files.push_back(name);
}

Json ResultBundle::manifest(int threads) const {
  Json m;
  m["manifest_version"] = 1;
  m["tool"] = "qsparse";
  m["version"] = version_string();
  m["command"] = command;
  m["config"] = config;
  m["threads"] = threads;
  m["outputs"] = files;
  m["derived"] = derived;
  m["wall_seconds"] = wall_seconds;
  return m;
}

void ResultBundle::write_manifest(int threads) const {
  std::ofstream out(out_dir / "manifest.json", std::ios::binary);
  if (!out) throw Error("cannot write manifest in " + out_dir.string());
  out << manifest(threads).dump(2) << '\n';
}

const char* version_string() { return QSPARSE_GIT_DESCRIBE; }

}  // namespace qsparse::cli
