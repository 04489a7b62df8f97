#include "qsparse/ham/hamiltonian.hpp"

#include <bit>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qsparse/core/errors.hpp"

namespace qsparse::ham {

namespace {

// i^k for k mod 4.
Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void require_dense(int n) {
  if (n > kMaxDenseQubits)
    throw SizeLimitExceeded("dense Hamiltonian limited to " + std::to_string(kMaxDenseQubits) +
                            " qubits, got " + std::to_string(n));
}

}  // namespace

std::string PauliString::to_string() const {
  std::ostringstream os;
  os << std::showpos << coefficient << std::noshowpos;
  if (factors.empty()) os << " I";
  for (const auto& [q, a] : factors) os << ' ' << axis_name(a) << q;
  return os.str();
}

PauliMasks pauli_masks(const PauliString& p, int num_qubits) {
  PauliMasks m;
  for (const auto& [q, a] : p.factors) {
    require(q >= 0 && q < num_qubits, "Pauli factor on qubit " + std::to_string(q) +
                                          " outside register of " + std::to_string(num_qubits));
    const std::uint64_t bit = qubit_bit(num_qubits, q);
    if (a != Axis::Z) m.flip |= bit;
    if (a != Axis::X) m.phase |= bit;
    if (a == Axis::Y) ++m.num_y;
  }
  return m;
}

Hamiltonian::Hamiltonian(int num_qubits, std::vector<PauliString> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "Hamiltonian qubit count out of range");
  for (const auto& t : terms_) pauli_masks(t, num_qubits_);
}

std::string Hamiltonian::to_string() const {
  std::ostringstream os;
  for (const auto& t : terms_) os << t.to_string() << '\n';
  return os.str();
}

void LatticeSpec::validate() const {
  require(lx >= 1 && ly >= 1, "lattice sides must be positive");
  require(lx * ly >= 2, "lattice needs at least two sites");
}

std::vector<std::pair<int, int>> LatticeSpec::bonds() const {
  validate();
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < ly; ++y)
    for (int x = 0; x + 1 < lx; ++x) out.emplace_back(site(x, y), site(x + 1, y));
  for (int y = 0; y + 1 < ly; ++y)
    for (int x = 0; x < lx; ++x) out.emplace_back(site(x, y), site(x, y + 1));
  return out;
}

bool LatticeSpec::adjacent(int a, int b) const {
  const int ax = a % lx, ay = a / lx, bx = b % lx, by = b / lx;
  return std::abs(ax - bx) + std::abs(ay - by) == 1;
}

Hamiltonian build_af2dnnh(const LatticeSpec& lattice, double j, double h) {
  lattice.validate();
  std::vector<PauliString> terms;
  // Zero couplings add no terms.
  if (j != 0.0)
    for (const auto& [a, b] : lattice.bonds())
      for (Axis ax : {Axis::X, Axis::Y, Axis::Z})
        terms.push_back({j, {{a, ax}, {b, ax}}});
  if (h != 0.0)
    for (int q = 0; q < lattice.num_sites(); ++q) terms.push_back({h, {{q, Axis::Z}}});
  return Hamiltonian(lattice.num_sites(), std::move(terms));
}

// P|b> = i^{#Y} (-1)^{popcount(b & phase)} |b ^ flip>
StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& psi) {
  require(psi.num_qubits() == h.num_qubits(), "state and Hamiltonian qubit counts differ");
  StateVector out = StateVector::from_amplitudes(std::vector<Complex>(psi.dim()), false);
  const auto in = psi.amplitudes();
  auto dst = out.amplitudes();
  for (const auto& t : h.terms()) {
    const PauliMasks m = pauli_masks(t, h.num_qubits());
    const Complex c = t.coefficient * i_power(m.num_y);
    for (std::size_t b = 0; b < in.size(); ++b) {
      const double sign = (std::popcount(b & m.phase) & 1) ? -1.0 : 1.0;
      dst[b ^ m.flip] += sign * c * in[b];
    }
  }
  return out;
}

double expectation(const StateVector& psi, const Hamiltonian& h) {
  require(psi.num_qubits() == h.num_qubits(), "state and Hamiltonian qubit counts differ");
  const auto a = psi.amplitudes();
  double total = 0.0;
  for (const auto& t : h.terms()) {
    const PauliMasks m = pauli_masks(t, h.num_qubits());
    Complex acc = 0.0;
    for (std::size_t b = 0; b < a.size(); ++b) {
      const double sign = (std::popcount(b & m.phase) & 1) ? -1.0 : 1.0;
      acc += sign * std::conj(a[b ^ m.flip]) * a[b];
    }
    total += t.coefficient * (i_power(m.num_y) * acc).real();
  }
  return total;
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian& h) {
  require_dense(h.num_qubits());
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    const PauliMasks m = pauli_masks(t, h.num_qubits());
    const Complex c = t.coefficient * i_power(m.num_y);
    for (std::size_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & m.phase) & 1) ? -1.0 : 1.0;
      mat(b ^ m.flip, b) += sign * c;
    }
  }
  return mat;
}

GroundState exact_ground_state(const Hamiltonian& h) {
  const Eigen::MatrixXcd mat = dense_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat);
  if (es.info() != Eigen::Success) throw InvalidState("Hamiltonian diagonalization failed");
  const Eigen::VectorXcd v = es.eigenvectors().col(0);
  std::vector<Complex> amps(v.data(), v.data() + v.size());
  return {es.eigenvalues()(0), StateVector::from_amplitudes(std::move(amps), true)};
}

double exact_ground_energy(const Hamiltonian& h) { return exact_ground_state(h).energy; }

}  // namespace qsparse::ham
