#include "qsparse/enc/sine_mps.hpp"

#include <cmath>

#include "qsparse/core/errors.hpp"

namespace qsparse::enc {

SineMPS::SineMPS(double k, double phi, int num_qubits) : k_(k), phi_(phi), n_(num_qubits) {
  require(k > 0.0 && std::isfinite(k), "sine wavenumber must be positive");
  require(std::isfinite(phi), "sine phase must be finite");
  require(num_qubits >= 2 && num_qubits <= kMaxQubits, "sine MPS needs 2 <= n <= 28");
}

Eigen::MatrixXd SineMPS::tensor(int site, int sigma) const {
  require(site >= 0 && site < n_, "MPS site out of range");
  require(sigma == 0 || sigma == 1, "physical index must be 0 or 1");
  const double beta = sigma * std::ldexp(k_, -(site + 1));
  if (site == 0) {
    Eigen::MatrixXd m(1, 2);
    m << std::cos(beta + phi_), std::sin(beta + phi_);
    return m;
  }
  if (site == n_ - 1) {
    Eigen::MatrixXd m(2, 1);
    m << std::sin(beta), std::cos(beta);
    return m;
  }
  Eigen::MatrixXd m(2, 2);
  m << std::cos(beta), std::sin(beta), -std::sin(beta), std::cos(beta);
  return m;
}

std::vector<double> SineMPS::contract() const {
  // Row vectors (c, s) for every prefix; index = prefix bits read MSB first.
  std::vector<double> c{std::cos(phi_), std::cos(k_ / 2.0 + phi_)};
  std::vector<double> s{std::sin(phi_), std::sin(k_ / 2.0 + phi_)};
  for (int q = 1; q < n_ - 1; ++q) {
    const double beta = std::ldexp(k_, -(q + 1));
    const double cb = std::cos(beta), sb = std::sin(beta);
    std::vector<double> c2(2 * c.size()), s2(2 * s.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      c2[2 * j] = c[j];
      s2[2 * j] = s[j];
      c2[2 * j + 1] = c[j] * cb - s[j] * sb;
      s2[2 * j + 1] = c[j] * sb + s[j] * cb;
    }
    c.swap(c2);
    s.swap(s2);
  }
  const double beta = std::ldexp(k_, -n_);
  const double sb = std::sin(beta), cb = std::cos(beta);
  std::vector<double> amps(2 * c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    amps[2 * j] = s[j];
    amps[2 * j + 1] = c[j] * sb + s[j] * cb;
  }
  return amps;
}

StateVector SineMPS::to_state() const {
  const std::vector<double> amps = contract();
  double nrm2 = 0.0;
  for (double a : amps) nrm2 += a * a;
  const double nrm = std::sqrt(nrm2);
  if (!(nrm > 1e-300 * static_cast<double>(amps.size()))) throw InvalidArgument("sine vanishes on every grid point");
  std::vector<Complex> out(amps.size());
  for (std::size_t j = 0; j < amps.size(); ++j) out[j] = amps[j] / nrm;
  return StateVector::from_amplitudes(std::move(out), false);
}

Eigen::MatrixXd SineMPS::left_environment(int r) const {
  require(r >= 0 && r < n_, "left environment size out of range");
  Eigen::MatrixXd env = Eigen::MatrixXd::Identity(1, 1);
  for (int q = 0; q < r; ++q) {
    const Eigen::MatrixXd m0 = tensor(q, 0), m1 = tensor(q, 1);
    env = m0.transpose() * env * m0 + m1.transpose() * env * m1;
  }
  return env;
}

Eigen::MatrixXd SineMPS::right_environment(int r) const {
  require(r >= 0 && r < n_, "right environment size out of range");
  Eigen::MatrixXd env = Eigen::MatrixXd::Identity(1, 1);
  for (int q = n_ - 1; q >= n_ - r; --q) {
    const Eigen::MatrixXd m0 = tensor(q, 0), m1 = tensor(q, 1);
    env = m0 * env * m0.transpose() + m1 * env * m1.transpose();
  }
  return env;
}

Eigen::Matrix2d SineMPS::site_density(int site) const {
  require(site >= 0 && site < n_, "MPS site out of range");
  const Eigen::MatrixXd left = left_environment(site);
  const Eigen::MatrixXd right = right_environment(n_ - site - 1);
  const Eigen::MatrixXd m[2] = {tensor(site, 0), tensor(site, 1)};
  Eigen::Matrix2d rho;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) rho(a, b) = (left * m[a] * right * m[b].transpose()).trace();
  }
  const double tr = rho.trace();
  if (!(tr > 0.0)) throw InvalidArgument("sine vanishes on every grid point");
  return rho / tr;
}

StateVector sine_mps_state(double k, double phi, int num_qubits) {
  return SineMPS(k, phi, num_qubits).to_state();
}

Eigen::Matrix2d sine_rdo_closed_form(double k, double phi, int q) {
  require(k > 0.0 && std::isfinite(k), "wavenumber must be positive");
  require(q >= 0, "qubit index must be non-negative");
  const double t = std::ldexp(k, -q - 1);
  const double den = 4.0 * k - 2.0 * std::sin(2.0 * (k + phi)) + 2.0 * std::sin(2.0 * phi);
  if (std::abs(den) < 1e-14 * std::max(1.0, k)) throw InvalidArgument("closed-form RDO denominator vanishes");
  const double cos_t = std::cos(t);
  if (std::abs(cos_t) < 1e-300) throw InvalidArgument("sec(2^{-q-1} k) diverges");
  const double sec = 1.0 / cos_t;
  const double r00 = (2.0 * k - sec * (std::sin((2.0 + std::ldexp(1.0, -q - 1)) * k + 2.0 * phi) -
                                       std::sin(t + 2.0 * phi))) / den;
  const double r01 = (2.0 * k * cos_t - sec * (std::sin(2.0 * (k + phi)) - std::sin(2.0 * phi))) / den;
  const double r11 = (2.0 * k - sec * (std::sin((2.0 - std::ldexp(1.0, -q - 1)) * k + 2.0 * phi) -
                                       std::sin(2.0 * phi - t))) / den;
  Eigen::Matrix2d rho;
  rho << r00, r01, r01, r11;
  return rho;
}

}  // namespace qsparse::enc
