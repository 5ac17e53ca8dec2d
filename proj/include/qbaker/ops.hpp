#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "qbaker/types.hpp"

// Row-wise qubit operations. Slots are 1-based, slot 1 the most significant
// bit of the row index. Each routine acts on every column, so the same code
// updates a state vector or builds a dense matrix from the identity.
namespace qbaker::ops {

inline Eigen::Index slot_mask(int qubits, int slot) {
  if (slot < 1 || slot > qubits) throw std::out_of_range("slot index out of range");
  return Eigen::Index{1} << (qubits - slot);
}

template <typename Derived, typename Real>
void apply_single_qubit(Eigen::MatrixBase<Derived>& m, int qubits, int slot, const Matrix2c<Real>& u) {
  const Eigen::Index mask = slot_mask(qubits, slot);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i & mask) continue;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto v0 = m(i, c);
      const auto v1 = m(i | mask, c);
      m(i, c) = u(0, 0) * v0 + u(0, 1) * v1;
      m(i | mask, c) = u(1, 0) * v0 + u(1, 1) * v1;
    }
  }
}

template <typename Derived, typename Scalar>
void apply_controlled_phase(Eigen::MatrixBase<Derived>& m, int qubits, int control, int target,
                            const Scalar& phase) {
  const Eigen::Index both = slot_mask(qubits, control) | slot_mask(qubits, target);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if ((i & both) == both) m.row(i) *= phase;
  }
}

template <typename Derived>
void apply_swap(Eigen::MatrixBase<Derived>& m, int qubits, int slot_a, int slot_b) {
  const Eigen::Index ma = slot_mask(qubits, slot_a);
  const Eigen::Index mb = slot_mask(qubits, slot_b);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if ((i & ma) && !(i & mb)) m.row(i).swap(m.row((i ^ ma) | mb));
  }
}

/// Image of index j under the cyclic shift of slots 1..n:
/// (b_1, b_2, ..., b_n, rest) -> (b_2, ..., b_n, b_1, rest).
inline std::uint64_t cyclic_shift_index(int qubits, int dot, std::uint64_t j) {
  const int low = qubits - dot;
  const std::uint64_t head = j >> low;
  const std::uint64_t rest = j & ((std::uint64_t{1} << low) - 1);
  const std::uint64_t mask = (std::uint64_t{1} << dot) - 1;
  const std::uint64_t rotated = ((head << 1) | (head >> (dot - 1))) & mask;
  return (rotated << low) | rest;
}

template <typename Derived>
void apply_cyclic_shift(Eigen::MatrixBase<Derived>& m, int qubits, int dot) {
  if (dot < 1 || dot > qubits) throw std::out_of_range("cyclic shift needs 1 <= n <= N");
  if (dot == 1) return;
  typename Derived::PlainObject out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    out.row(static_cast<Eigen::Index>(cyclic_shift_index(qubits, dot, static_cast<std::uint64_t>(j)))) =
        m.row(j);
  }
  m = out;
}

}  // namespace qbaker::ops
