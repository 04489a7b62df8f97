#pragma once

#include <functional>
#include <vector>

#include "qsparse/core/state_vector.hpp"

namespace qsparse::enc {

/// 2^n real samples f(x_j) on the dyadic grid x_j = j * 2^-n of [0, 1).
struct GridFunction {
  int num_qubits = 0;
  std::vector<double> values;

  /// Checks the length against 2^num_qubits.
  GridFunction(int num_qubits, std::vector<double> values);

  double norm() const;
};

/// Samples f at x_j = j * 2^-n.
GridFunction sample_grid(int num_qubits, const std::function<double(double)>& f);

/// amps_j = values_j / ||values||_2. Throws InvalidArgument for an all-zero input.
StateVector amplitude_encode(const GridFunction& f);

}  // namespace qsparse::enc
