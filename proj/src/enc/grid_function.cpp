#include "qsparse/enc/grid_function.hpp"

#include <cmath>
#include <string>

#include "qsparse/core/errors.hpp"

namespace qsparse::enc {

GridFunction::GridFunction(int n, std::vector<double> v) : num_qubits(n), values(std::move(v)) {
  require(n >= 1 && n <= kMaxQubits, "grid qubit count out of range");
  if (values.size() != (std::size_t{1} << n)) {
    throw InvalidArgument("grid function on " + std::to_string(n) + " qubits needs " +
                          std::to_string(std::size_t{1} << n) + " values, got " + std::to_string(values.size()));
  }
}

double GridFunction::norm() const {
  double acc = 0.0;
  for (double v : values) acc += v * v;
  return std::sqrt(acc);
}

GridFunction sample_grid(int num_qubits, const std::function<double(double)>& f) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "grid qubit count out of range");
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double dx = std::ldexp(1.0, -num_qubits);
  std::vector<double> v(dim);
  for (std::size_t j = 0; j < dim; ++j) v[j] = f(static_cast<double>(j) * dx);
  return GridFunction(num_qubits, std::move(v));
}

StateVector amplitude_encode(const GridFunction& f) {
  const double nrm = f.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw InvalidArgument("cannot encode an all-zero or non-finite function");
  std::vector<Complex> amps(f.values.size());
  for (std::size_t j = 0; j < amps.size(); ++j) amps[j] = f.values[j] / nrm;
  return StateVector::from_amplitudes(std::move(amps), false);
}

}  // namespace qsparse::enc
