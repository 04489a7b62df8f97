#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qsparse/enc/grid_function.hpp"

namespace qsparse::enc {

enum class Extraction { Line, Flatten };
enum class FieldFormat { Auto, Csv, RawF64 };

Extraction parse_extraction(const std::string& name);
std::string extraction_name(Extraction e);

struct FieldStats {
  double min;
  double max;
  double l2;
};

FieldStats field_stats(const std::vector<double>& values);

/// CSV with one value per line (blank lines and lines starting with '#'
/// skipped) or raw little-endian float64. Auto picks raw for .bin/.f64/.raw.
std::vector<double> read_scalar_file(const std::filesystem::path& path, FieldFormat format = FieldFormat::Auto);

struct ExtractionSpec {
  Extraction mode = Extraction::Line;
  std::uint64_t stride = 1;
  std::uint64_t offset = 0;  ///< line mode only
};

/// Line: values[offset + j*stride] for j < 2^n. Flatten: the data is an L^3
/// cube (row-major); the sub-grid with spacing `stride` is flattened row-major
/// and its first 2^n entries are kept.
GridFunction extract_field(const std::vector<double>& data, int num_qubits, const ExtractionSpec& spec);

struct IngestResult {
  GridFunction function;
  FieldStats stats;
};

IngestResult ingest_scalar_field(const std::filesystem::path& path, int num_qubits, const ExtractionSpec& spec,
                                 FieldFormat format = FieldFormat::Auto);

/// Periodic 1D field of 2^n points from random-phase Fourier modes with
/// amplitude k^{exponent/2} (power spectrum k^exponent), k = 1 .. 2^{n-1}-1.
GridFunction turbulence_surrogate(int num_qubits, std::uint64_t seed, double exponent = -5.0 / 3.0);

}  // namespace qsparse::enc
