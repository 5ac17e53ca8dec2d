#include "qbaker/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbaker/baker.hpp"
#include "qbaker/ops.hpp"

namespace qbaker {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix2c<double> phase_gate(double angle) {
  Matrix2c<double> m = Matrix2c<double>::Identity();
  m(1, 1) = std::polar(1.0, angle);
  return m;
}

Matrix2c<double> hadamard() {
  Matrix2c<double> h;
  h << 1, 1, 1, -1;
  return h / std::numbers::sqrt2;
}

template <typename Derived>
void apply_gate(Eigen::MatrixBase<Derived>& m, int qubits, const Gate& g) {
  switch (g.kind) {
    case GateKind::single_qubit:
      ops::apply_single_qubit(m, qubits, g.targets[0], g.matrix);
      break;
    case GateKind::controlled_phase:
      ops::apply_controlled_phase(m, qubits, g.targets[0], g.targets[1], std::polar(1.0, g.angle));
      break;
    case GateKind::swap:
      ops::apply_swap(m, qubits, g.targets[0], g.targets[1]);
      break;
    case GateKind::global_phase:
      m *= std::polar(1.0, g.angle);
      break;
  }
}

Gate inverse(const Gate& g) {
  Gate out = g;
  out.angle = -g.angle;
  if (g.kind == GateKind::single_qubit) out.matrix = g.matrix.adjoint();
  return out;
}

double wrap_angle(double angle) {
  angle = std::fmod(angle, 2 * kPi);
  if (angle > kPi) angle -= 2 * kPi;
  if (angle <= -kPi) angle += 2 * kPi;
  return angle;
}

// Merges runs of single-qubit gates on a slot and collects global phases into
// one trailing record.
GateList fuse(const GateList& in) {
  GateList out{in.qubits, {}};
  std::vector<std::ptrdiff_t> pending(static_cast<std::size_t>(in.qubits) + 1, -1);
  double phase = 0.0;
  for (const auto& g : in.gates) {
    switch (g.kind) {
      case GateKind::global_phase:
        phase += g.angle;
        break;
      case GateKind::single_qubit: {
        auto& slot = pending[static_cast<std::size_t>(g.targets[0])];
        if (slot >= 0) {
          auto& prev = out.gates[static_cast<std::size_t>(slot)];
          prev.matrix = (g.matrix * prev.matrix).eval();
        } else {
          slot = static_cast<std::ptrdiff_t>(out.gates.size());
          out.gates.push_back(g);
        }
        break;
      }
      default:
        for (int t : g.targets) pending[static_cast<std::size_t>(t)] = -1;
        out.gates.push_back(g);
        break;
    }
  }
  phase = wrap_angle(phase);
  if (phase != 0.0) out.gates.push_back(Gate::phase(phase));
  return out;
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::single_qubit: return "single_qubit";
    case GateKind::controlled_phase: return "controlled_phase";
    case GateKind::swap: return "swap";
    case GateKind::global_phase: return "global_phase";
  }
  return "unknown";
}

GateKind gate_kind_from_string(const std::string& name) {
  for (auto kind : {GateKind::single_qubit, GateKind::controlled_phase, GateKind::swap,
                    GateKind::global_phase}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown gate kind: " + name);
}

Gate Gate::single(int slot, const Matrix2c<double>& u) {
  return Gate{GateKind::single_qubit, {slot}, 0.0, u};
}
Gate Gate::cphase(int control, int target, double angle) {
  return Gate{GateKind::controlled_phase, {control, target}, angle, Matrix2c<double>::Identity()};
}
Gate Gate::swap(int a, int b) {
  return Gate{GateKind::swap, {a, b}, 0.0, Matrix2c<double>::Identity()};
}
Gate Gate::phase(double angle) {
  return Gate{GateKind::global_phase, {}, angle, Matrix2c<double>::Identity()};
}

std::size_t GateList::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [&](const Gate& g) { return g.kind == kind; }));
}

void validate(const GateList& circuit) {
  if (circuit.qubits < 1 || circuit.qubits > Dimensions::kMaxQubits) {
    throw std::invalid_argument("circuit qubit count out of range");
  }
  for (const auto& g : circuit.gates) {
    std::size_t expected = 0;
    switch (g.kind) {
      case GateKind::single_qubit: expected = 1; break;
      case GateKind::controlled_phase:
      case GateKind::swap: expected = 2; break;
      case GateKind::global_phase: expected = 0; break;
    }
    if (g.targets.size() != expected) throw std::invalid_argument("wrong number of gate targets");
    for (int t : g.targets) {
      if (t < 1 || t > circuit.qubits) throw std::invalid_argument("gate slot out of range");
    }
    if (expected == 2 && g.targets[0] == g.targets[1]) {
      throw std::invalid_argument("two-slot gate needs distinct slots");
    }
    if (g.kind == GateKind::single_qubit && unitarity_defect(g.matrix) > 1e-12) {
      throw std::invalid_argument("single-qubit gate matrix is not unitary");
    }
  }
}

GateList emit_partial_transform(const Dimensions& dims, int dot, bool adjoint) {
  if (dot < 0 || dot > dims.qubits()) throw std::out_of_range("dot position must lie in [0, N]");
  const int m = dims.qubits() - dot;
  GateList out{dims.qubits(), {}};
  auto slot = [&](int l) { return dot + l; };

  // Half-step phases e^{i pi a/M}: weight 2^{m-l} on register qubit l.
  auto half_steps = [&] {
    for (int l = 1; l <= m; ++l) out.gates.push_back(Gate::single(slot(l), phase_gate(kPi / std::ldexp(1.0, l))));
  };
  half_steps();
  for (int l = 1; l <= m; ++l) {
    out.gates.push_back(Gate::single(slot(l), hadamard()));
    for (int k = 2; k <= m - l + 1; ++k) {
      out.gates.push_back(Gate::cphase(slot(l + k - 1), slot(l), 2 * kPi / std::ldexp(1.0, k)));
    }
  }
  for (int l = 1; l <= m / 2; ++l) out.gates.push_back(Gate::swap(slot(l), slot(m + 1 - l)));
  half_steps();
  out.gates.push_back(Gate::phase(kPi / std::ldexp(2.0, m)));

  if (adjoint) {
    std::reverse(out.gates.begin(), out.gates.end());
    std::transform(out.gates.begin(), out.gates.end(), out.gates.begin(), inverse);
  }
  return out;
}

GateList emit_circuit(const Dimensions& dims, int dot) {
  const int qubits = dims.qubits();
  if (dot < 1 || dot > qubits) throw std::out_of_range("baker map index must lie in [1, N]");

  GateList raw{qubits, {}};
  if (dot == qubits) {
    for (int k = 1; k < qubits; ++k) raw.gates.push_back(Gate::swap(k, k + 1));
    raw.gates.push_back(Gate::single(qubits, last_qubit_unitary<double>()));
    return raw;
  }
  auto append = [&](const GateList& part) {
    raw.gates.insert(raw.gates.end(), part.gates.begin(), part.gates.end());
  };
  append(emit_partial_transform(dims, dot, true));
  for (int k = 1; k < dot; ++k) raw.gates.push_back(Gate::swap(k, k + 1));
  append(emit_partial_transform(dims, dot - 1, false));
  return fuse(raw);
}

void apply_circuit_inplace(VectorXc& state, const GateList& circuit) {
  if (state.size() != (Eigen::Index{1} << circuit.qubits)) {
    throw std::invalid_argument("state size does not match circuit width");
  }
  for (const auto& g : circuit.gates) apply_gate(state, circuit.qubits, g);
}

MatrixXc circuit_to_matrix(const GateList& circuit) {
  if (circuit.qubits > 12) throw std::invalid_argument("circuit_to_matrix is capped at N <= 12");
  validate(circuit);
  const Eigen::Index dim = Eigen::Index{1} << circuit.qubits;
  MatrixXc m = MatrixXc::Identity(dim, dim);
  for (const auto& g : circuit.gates) apply_gate(m, circuit.qubits, g);
  return m;
}

}  // namespace qbaker
