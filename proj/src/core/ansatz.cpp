#include "qsparse/core/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsparse/core/errors.hpp"

namespace qsparse {

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

Axis parse_axis(char c) {
  switch (c) {
    case 'X': case 'x': return Axis::X;
    case 'Y': case 'y': return Axis::Y;
    case 'Z': case 'z': return Axis::Z;
    default: throw InvalidArgument(std::string("unknown rotation axis '") + c + "'");
  }
}

Mat2 rotation_matrix(Axis axis, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex mis(0.0, -s);
  switch (axis) {
    case Axis::X: return {c, mis, mis, c};
    case Axis::Y: return {c, -s, s, c};
    case Axis::Z: return {Complex(c, -s), 0.0, 0.0, Complex(c, s)};
  }
  throw InvalidArgument("bad axis");
}

Mat2 pauli_matrix(Axis axis) {
  switch (axis) {
    case Axis::X: return {0.0, 1.0, 1.0, 0.0};
    case Axis::Y: return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
    case Axis::Z: return {1.0, 0.0, 0.0, -1.0};
  }
  throw InvalidArgument("bad axis");
}

std::vector<BrickPair> brick_pairs(int num_qubits, int layer) {
  require(num_qubits >= 1, "brick_pairs needs at least one qubit");
  require(layer >= 1, "layers are numbered from 1");
  std::vector<BrickPair> pairs;
  const int offset = (layer % 2 == 1) ? 1 : 0;
  for (int i = 0; i < num_qubits / 2; ++i) {
    const int a = (2 * i + offset) % num_qubits, b = (2 * i + 1 + offset) % num_qubits;
    pairs.push_back({std::min(a, b), std::max(a, b)});
  }
  return pairs;
}

BrickworkAnsatz::BrickworkAnsatz(int num_qubits, int total_layers, std::vector<Axis> axes)
    : num_qubits_(num_qubits), total_layers_(total_layers), axes_(std::move(axes)) {
  require(num_qubits >= 1 && num_qubits <= kMaxQubits, "ansatz qubit count out of range");
  require(total_layers >= 0, "ansatz depth must be non-negative");
  require(axes_.size() == static_cast<std::size_t>(num_qubits) * total_layers,
          "ansatz needs one axis per rotation (n * Dtot)");
  layer_offsets_.reserve(total_layers + 1);
  for (int d = 1; d <= total_layers; ++d) {
    layer_offsets_.push_back(ops_.size());
    std::vector<bool> covered(num_qubits, false);
    auto rot = [&](int q) {
      const std::size_t p = param_index(d, q);
      ops_.push_back({CircuitOp::Kind::Rotation, q, -1, axes_[p], p});
    };
    for (const BrickPair& bp : brick_pairs(num_qubits, d)) {
      rot(bp.control);
      rot(bp.target);
      ops_.push_back({CircuitOp::Kind::Cnot, bp.control, bp.target, Axis::Z, 0});
      covered[bp.control] = covered[bp.target] = true;
    }
    for (int q = 0; q < num_qubits; ++q) {
      if (!covered[q]) rot(q);
    }
  }
  layer_offsets_.push_back(ops_.size());
}

BrickworkAnsatz BrickworkAnsatz::with_random_axes(int num_qubits, int total_layers, Rng& rng) {
  std::vector<Axis> axes(static_cast<std::size_t>(num_qubits) * std::max(total_layers, 0));
  for (Axis& a : axes) a = static_cast<Axis>(uniform_index(rng, 3));
  return BrickworkAnsatz(num_qubits, total_layers, std::move(axes));
}

BrickworkAnsatz BrickworkAnsatz::with_uniform_axis(int num_qubits, int total_layers, Axis axis) {
  std::vector<Axis> axes(static_cast<std::size_t>(num_qubits) * std::max(total_layers, 0), axis);
  return BrickworkAnsatz(num_qubits, total_layers, std::move(axes));
}

std::vector<RotationGateSpec> BrickworkAnsatz::gates() const {
  std::vector<RotationGateSpec> out;
  out.reserve(axes_.size());
  for (int d = 1; d <= total_layers_; ++d) {
    for (std::size_t k = layer_begin(d); k < layer_begin(d + 1); ++k) {
      const CircuitOp& op = ops_[k];
      if (op.kind == CircuitOp::Kind::Rotation) out.push_back({d, op.q0, op.axis, op.param_index});
    }
  }
  return out;
}

BrickworkAnsatz BrickworkAnsatz::truncated(int layers) const {
  require(layers >= 0 && layers <= total_layers_, "truncation depth out of range");
  std::vector<Axis> axes(axes_.begin(), axes_.begin() + static_cast<std::ptrdiff_t>(layers) * num_qubits_);
  return BrickworkAnsatz(num_qubits_, layers, std::move(axes));
}

namespace {

void check_theta(const BrickworkAnsatz& ansatz, std::span<const double> theta) {
  if (theta.size() != ansatz.num_parameters()) {
    throw InvalidArgument("expected " + std::to_string(ansatz.num_parameters()) + " parameters, got " +
                          std::to_string(theta.size()));
  }
}

void check_register(const BrickworkAnsatz& ansatz, const StateVector& psi) {
  if (psi.num_qubits() != ansatz.num_qubits()) throw InvalidArgument("state and ansatz qubit counts differ");
}

// <phi| sigma_q |lambda>
Complex pauli_sandwich(const StateVector& phi, const StateVector& lambda, int qubit, Axis axis) {
  const std::size_t bit = qubit_bit(phi.num_qubits(), qubit);
  const std::size_t dim = phi.dim();
  Complex acc = 0.0;
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      const Complex p0 = std::conj(phi[i]);
      const Complex p1 = std::conj(phi[i | bit]);
      const Complex l0 = lambda[i];
      const Complex l1 = lambda[i | bit];
      switch (axis) {
        case Axis::X: acc += p0 * l1 + p1 * l0; break;
        case Axis::Y: acc += Complex(0.0, 1.0) * (p1 * l0 - p0 * l1); break;
        case Axis::Z: acc += p0 * l0 - p1 * l1; break;
      }
    }
  }
  return acc;
}

}  // namespace

void apply_ops(const BrickworkAnsatz& ansatz, std::span<const double> theta, std::size_t first,
               std::size_t last, StateVector& psi) {
  check_theta(ansatz, theta);
  check_register(ansatz, psi);
  const auto& ops = ansatz.ops();
  require(first <= last && last <= ops.size(), "op range out of bounds");
  for (std::size_t k = first; k < last; ++k) {
    const CircuitOp& op = ops[k];
    if (op.kind == CircuitOp::Kind::Rotation) {
      psi.apply_1q(rotation_matrix(op.axis, theta[op.param_index]), op.q0);
    } else {
      psi.apply_cnot(op.q0, op.q1);
    }
  }
}

StateVector apply_ansatz(const BrickworkAnsatz& ansatz, std::span<const double> theta, const StateVector& psi0) {
  StateVector psi = psi0;
  apply_ops(ansatz, theta, 0, ansatz.ops().size(), psi);
  return psi;
}

std::vector<double> adjoint_gradient(const BrickworkAnsatz& ansatz, std::span<const double> theta,
                                     const StateVector& output, const StateVector& covector) {
  check_theta(ansatz, theta);
  check_register(ansatz, output);
  check_register(ansatz, covector);
  std::vector<double> grad(ansatz.num_parameters(), 0.0);
  StateVector phi = output;
  StateVector lambda = covector;
  const auto& ops = ansatz.ops();
  for (std::size_t k = ops.size(); k-- > 0;) {
    const CircuitOp& op = ops[k];
    if (op.kind == CircuitOp::Kind::Rotation) {
      // d psi / d theta = U_after (-i/2 sigma) phi, so 2 Re <d psi|g> = -Im <phi|sigma|lambda>.
      grad[op.param_index] += -pauli_sandwich(phi, lambda, op.q0, op.axis).imag();
      const Mat2 inv = rotation_matrix(op.axis, -theta[op.param_index]);
      phi.apply_1q(inv, op.q0);
      lambda.apply_1q(inv, op.q0);
    } else {
      phi.apply_cnot(op.q0, op.q1);
      lambda.apply_cnot(op.q0, op.q1);
    }
  }
  return grad;
}

StateVector fourth_root_y_state(int num_qubits) {
  const Complex w = std::polar(1.0, std::numbers::pi / 4.0);
  const Complex a = 0.5 * (1.0 + w);
  const Complex b = Complex(0.0, 0.5) * (1.0 - w);
  return StateVector::product_state(num_qubits, {a, b});
}

}  // namespace qsparse
