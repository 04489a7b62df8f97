#include "qsparse/enc/qnsst.hpp"

#include <cmath>
#include <numbers>

#include "qsparse/core/errors.hpp"

namespace qsparse::enc {

int qnsst_threshold(double lambda_min) {
  require(lambda_min > 0.0 && lambda_min <= 1.0, "lambda_min must lie in (0, 1]");
  const double v = std::log2(std::numbers::pi / lambda_min);
  const double r = std::round(v);
  if (std::abs(v - r) < 1e-9) return static_cast<int>(r);
  return static_cast<int>(std::ceil(v));
}

double qnsst_residual(const GridFunction& f, int q) {
  const int n = f.num_qubits;
  require(q >= 1 && q < n, "qnsst_residual needs 1 <= q < n");
  const double nrm = f.norm();
  require(nrm > 0.0, "cannot encode an all-zero function");
  const std::size_t stride = std::size_t{1} << (n - q);
  const std::size_t coarse = std::size_t{1} << q;
  double coarse_nrm2 = 0.0;
  for (std::size_t j = 0; j < coarse; ++j) coarse_nrm2 += f.values[j * stride] * f.values[j * stride];
  require(coarse_nrm2 > 0.0, "subsampled function vanishes");
  // |f_q> (x) |+>^(n-q): coarse amplitude repeated over each block, scaled by 2^{-(n-q)/2}.
  const double coarse_scale = 1.0 / std::sqrt(coarse_nrm2 * static_cast<double>(stride));
  double acc = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double d = f.values[i] / nrm - f.values[(i / stride) * stride] * coarse_scale;
    acc += d * d;
  }
  return std::sqrt(acc);
}

GridFunction sum_of_sines(int num_qubits, const std::vector<SineTone>& tones) {
  require(!tones.empty(), "at least one tone required");
  for (const SineTone& t : tones) require(t.wavelength > 0.0, "wavelengths must be positive");
  return sample_grid(num_qubits, [&tones](double x) {
    double v = 0.0;
    for (const SineTone& t : tones) v += t.amplitude * std::sin(2.0 * std::numbers::pi * x / t.wavelength + t.phase);
    return v;
  });
}

std::vector<double> qnsst_residual_sweep(const GridFunction& f) {
  std::vector<double> out;
  for (int q = 1; q < f.num_qubits; ++q) out.push_back(qnsst_residual(f, q));
  return out;
}

double log2_slope(const std::vector<double>& residuals, int q_first, int q_last) {
  require(q_first >= 1 && q_last > q_first && q_last <= static_cast<int>(residuals.size()),
          "slope window out of range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int count = q_last - q_first + 1;
  for (int q = q_first; q <= q_last; ++q) {
    const double r = residuals[q - 1];
    require(r > 0.0, "residual must be positive to take log2");
    const double y = std::log2(r);
    sx += q;
    sy += y;
    sxx += static_cast<double>(q) * q;
    sxy += q * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

int decay_onset(const std::vector<double>& residuals, double min_drop) {
  const int last = static_cast<int>(residuals.size());
  int onset = last;
  for (int q = last - 1; q >= 1; --q) {
    const double a = residuals[q - 1], b = residuals[q];
    if (!(a > 0.0 && b > 0.0) || std::log2(b) - std::log2(a) > -min_drop) break;
    onset = q;
  }
  return onset;
}

}  // namespace qsparse::enc
