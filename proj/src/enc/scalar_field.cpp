#include "qsparse/enc/scalar_field.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "qsparse/core/errors.hpp"
#include "qsparse/core/qft.hpp"
#include "qsparse/core/random.hpp"

namespace qsparse::enc {

Extraction parse_extraction(const std::string& name) {
  if (name == "line") return Extraction::Line;
  if (name == "flatten") return Extraction::Flatten;
  throw InvalidArgument("unknown extraction '" + name + "' (expected line or flatten)");
}

std::string extraction_name(Extraction e) { return e == Extraction::Line ? "line" : "flatten"; }

FieldStats field_stats(const std::vector<double>& values) {
  require(!values.empty(), "no values");
  FieldStats s{values[0], values[0], 0.0};
  double acc = 0.0;
  for (double v : values) {
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    acc += v * v;
  }
  s.l2 = std::sqrt(acc);
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected one finite number, got '" +
                       std::string(t) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> read_raw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  if (bytes.size() % 8 != 0) throw ParseError(path.string() + ": size is not a multiple of 8 bytes");
  std::vector<double> out(bytes.size() / 8);
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::uint64_t word;
    std::memcpy(&word, bytes.data() + 8 * j, 8);
    if constexpr (std::endian::native == std::endian::big) word = __builtin_bswap64(word);
    out[j] = std::bit_cast<double>(word);
    if (!std::isfinite(out[j])) throw ParseError(path.string() + ": non-finite value at index " + std::to_string(j));
  }
  return out;
}

}  // namespace

std::vector<double> read_scalar_file(const std::filesystem::path& path, FieldFormat format) {
  if (format == FieldFormat::Auto) {
    const std::string ext = path.extension().string();
    format = (ext == ".bin" || ext == ".f64" || ext == ".raw") ? FieldFormat::RawF64 : FieldFormat::Csv;
  }
  std::vector<double> v = format == FieldFormat::Csv ? read_csv(path) : read_raw(path);
  if (v.empty()) throw ParseError(path.string() + ": no data");
  return v;
}

GridFunction extract_field(const std::vector<double>& data, int num_qubits, const ExtractionSpec& spec) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "qubit count out of range");
  require(spec.stride >= 1, "stride must be >= 1");
  const std::size_t need = std::size_t{1} << num_qubits;
  std::vector<double> out;
  out.reserve(need);
  if (spec.mode == Extraction::Line) {
    if (data.size() <= spec.offset || (data.size() - 1 - spec.offset) / spec.stride + 1 < need) {
      throw InvalidArgument("insufficient data: need " + std::to_string(need) + " samples at stride " +
                            std::to_string(spec.stride) + ", have " + std::to_string(data.size()));
    }
    for (std::size_t j = 0; j < need; ++j) out.push_back(data[spec.offset + j * spec.stride]);
  } else {
    const auto side = static_cast<std::size_t>(std::llround(std::cbrt(static_cast<double>(data.size()))));
    if (side * side * side != data.size()) throw InvalidArgument("flatten extraction needs a cubic number of values");
    const std::size_t sub = (side + spec.stride - 1) / spec.stride;
    if (sub * sub * sub < need) throw InvalidArgument("insufficient data for flatten extraction");
    for (std::size_t i = 0; i < side && out.size() < need; i += spec.stride) {
      for (std::size_t j = 0; j < side && out.size() < need; j += spec.stride) {
        for (std::size_t k = 0; k < side && out.size() < need; k += spec.stride) {
          out.push_back(data[(i * side + j) * side + k]);
        }
      }
    }
  }
  return GridFunction(num_qubits, std::move(out));
}

IngestResult ingest_scalar_field(const std::filesystem::path& path, int num_qubits, const ExtractionSpec& spec,
                                 FieldFormat format) {
  GridFunction f = extract_field(read_scalar_file(path, format), num_qubits, spec);
  const FieldStats stats = field_stats(f.values);
  return IngestResult{std::move(f), stats};
}

GridFunction turbulence_surrogate(int num_qubits, std::uint64_t seed, double exponent) {
  require(num_qubits >= 2 && num_qubits <= kMaxQubits, "surrogate needs 2 <= n <= 28");
  const std::size_t dim = std::size_t{1} << num_qubits;
  Rng rng(seed);
  std::vector<Complex> spec(dim, Complex{0.0, 0.0});
  for (std::size_t k = 1; k < dim / 2; ++k) {
    const Complex c = std::polar(std::pow(static_cast<double>(k), exponent / 2.0), uniform_angle(rng));
    spec[k] = c;
    spec[dim - k] = std::conj(c);
  }
  // Hermitian spectrum, so the synthesis is real.
  const StateVector field = qft(StateVector::from_amplitudes(std::move(spec), false), true);
  std::vector<double> v(dim);
  for (std::size_t j = 0; j < dim; ++j) v[j] = field[j].real();
  return GridFunction(num_qubits, std::move(v));
}

}  // namespace qsparse::enc
