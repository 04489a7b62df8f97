#pragma once

#include <vector>

#include "qsparse/enc/grid_function.hpp"

namespace qsparse::enc {

/// ceil(log2(pi / lambda_min)) for 0 < lambda_min <= 1.
int qnsst_threshold(double lambda_min);

/// || |f_n> - |f_q> (x) |+>^(n-q) ||_2 with |f_q> the encoding of every
/// 2^(n-q)-th sample. Requires 1 <= q < n.
double qnsst_residual(const GridFunction& f, int q);

struct SineTone {
  double wavelength;
  double amplitude = 1.0;
  double phase = 0.0;
};

/// sum_t amplitude_t sin(2 pi x / wavelength_t + phase_t) on the n-qubit grid.
GridFunction sum_of_sines(int num_qubits, const std::vector<SineTone>& tones);

/// Residual for every q in [1, n).
std::vector<double> qnsst_residual_sweep(const GridFunction& f);

/// Least-squares slope of log2(residual) against q over [q_first, q_last].
double log2_slope(const std::vector<double>& residuals, int q_first, int q_last);

/// Smallest q after which every step q -> q+1 lowers log2(residual) by at
/// least `min_drop`; residuals[j] belongs to q = j + 1.
int decay_onset(const std::vector<double>& residuals, double min_drop = 0.7);

}  // namespace qsparse::enc
