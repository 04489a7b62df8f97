#include "qsparse/core/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qsparse/core/errors.hpp"

namespace qsparse {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw SizeLimitExceeded("qubit count " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps, bool normalize) {
  const std::size_t len = amps.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw InvalidArgument("amplitude count " + std::to_string(len) + " is not a power of two >= 2");
  }
  const int n = std::countr_zero(len);
  check_qubits(n);
  StateVector psi(n, std::move(amps));
  if (normalize) psi.normalize();
  return psi;
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
  StateVector psi(num_qubits);
  if (index >= psi.dim()) throw InvalidArgument("basis index out of range");
  psi.amps_[0] = 0.0;
  psi.amps_[index] = 1.0;
  return psi;
}

StateVector StateVector::product_state(int num_qubits, const std::array<Complex, 2>& single) {
  const double nrm = std::sqrt(std::norm(single[0]) + std::norm(single[1]));
  if (nrm == 0.0) throw InvalidArgument("single-qubit factor has zero norm");
  const Complex a = single[0] / nrm;
  const Complex b = single[1] / nrm;
  StateVector psi(num_qubits);
  const std::size_t dim = psi.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    const int ones = std::popcount(i);
    psi.amps_[i] = std::pow(a, num_qubits - ones) * std::pow(b, ones);
  }
  return psi;
}

StateVector StateVector::haar_random(int num_qubits, Rng& rng) {
  StateVector psi(num_qubits);
  for (auto& amp : psi.amps_) {
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    amp = Complex(re, im);
  }
  psi.normalize();
  return psi;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw InvalidState("cannot normalize a zero or non-finite state");
  const double inv = 1.0 / nrm;
  for (auto& a : amps_) a *= inv;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) throw InvalidArgument("inner product of states with different sizes");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

void StateVector::apply_1q(const Mat2& m, int qubit) {
  if (qubit < 0 || qubit >= num_qubits_) throw InvalidArgument("qubit index out of range");
  const std::size_t stride = qubit_bit(num_qubits_, qubit);
  const std::size_t dim = amps_.size();
  const Complex m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
  Complex* a = amps_.data();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = a[i];
      const Complex a1 = a[i + stride];
      a[i] = m00 * a0 + m01 * a1;
      a[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

void StateVector::apply_cnot(int control, int target) {
  if (control < 0 || control >= num_qubits_ || target < 0 || target >= num_qubits_ || control == target) {
    throw InvalidArgument("invalid CNOT qubits");
  }
  const std::size_t cbit = qubit_bit(num_qubits_, control);
  const std::size_t tbit = qubit_bit(num_qubits_, target);
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void StateVector::apply_2q(std::span<const Complex, 16> m, int q0, int q1) {
  if (q0 < 0 || q0 >= num_qubits_ || q1 < 0 || q1 >= num_qubits_ || q0 == q1) {
    throw InvalidArgument("invalid two-qubit gate qubits");
  }
  const std::size_t b0 = qubit_bit(num_qubits_, q0);
  const std::size_t b1 = qubit_bit(num_qubits_, q1);
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & (b0 | b1)) continue;
    const std::size_t idx[4] = {i, i | b1, i | b0, i | b0 | b1};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex acc{0.0, 0.0};
      for (int c = 0; c < 4; ++c) acc += m[4 * r + c] * in[c];
      amps_[idx[r]] = acc;
    }
  }
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("state sizes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace qsparse
