#pragma once

#include <string>
#include <vector>

#include "qbaker/types.hpp"

namespace qbaker {

enum class GateKind { single_qubit, controlled_phase, swap, global_phase };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

/// One elementary operation. Slots are 1-based, slot 1 most significant.
/// controlled_phase multiplies |11> on (targets[0], targets[1]) by e^{i angle};
/// global_phase multiplies the whole state by e^{i angle}.
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  double angle = 0.0;
  Matrix2c<double> matrix = Matrix2c<double>::Identity();

  static Gate single(int slot, const Matrix2c<double>& u);
  static Gate cphase(int control, int target, double angle);
  static Gate swap(int a, int b);
  static Gate phase(double angle);
};

struct GateList {
  int qubits = 1;
  std::vector<Gate> gates;

  std::size_t count(GateKind kind) const;
};

/// Throws std::invalid_argument when a gate has bad slots or a non-unitary matrix.
void validate(const GateList& circuit);

/// Gate list for B_n built from the factorized half-integer kernel:
/// G_n^dagger, the slot rotation as adjacent swaps, then G_{n-1}.
/// Adjacent single-qubit gates on a slot are fused; n = N lowers to swaps
/// plus the single gate u on slot N.
GateList emit_circuit(const Dimensions& dims, int dot);

/// Gates realizing G_n (or its adjoint) on the N - n least significant slots.
GateList emit_partial_transform(const Dimensions& dims, int dot, bool adjoint);

void apply_circuit_inplace(VectorXc& state, const GateList& circuit);

/// Ordered product of gate embeddings; refuses N > 12.
MatrixXc circuit_to_matrix(const GateList& circuit);

}  // namespace qbaker
