#pragma once

#include <functional>
#include <numbers>

#include "qbaker/classical.hpp"
#include "qbaker/fourier.hpp"
#include "qbaker/ops.hpp"

namespace qbaker {

namespace detail {

inline void require_map_index(int qubits, int dot) {
  if (dot < 1 || dot > qubits) throw std::out_of_range("baker map index must lie in [1, N]");
}

}  // namespace detail

/// Permutation moving slot 1 to slot n and slots 2..n one place left.
template <typename Real = double>
CMatrix<Real> cyclic_shift_operator(const Dimensions& dims, int dot) {
  detail::require_map_index(dims.qubits(), dot);
  CMatrix<Real> p = CMatrix<Real>::Identity(dims.dim(), dims.dim());
  ops::apply_cyclic_shift(p, dims.qubits(), dot);
  return p;
}

/// B_n as sum_label |dot(label_shift(label))><dot(label)|, with every dot
/// state built in product form. Serves as the oracle for baker_composed.
template <typename Real = double>
CMatrix<Real> baker_from_basis_map(const Dimensions& dims, int dot) {
  detail::require_map_index(dims.qubits(), dot);
  CMatrix<Real> source(dims.dim(), dims.dim());
  CMatrix<Real> target(dims.dim(), dims.dim());
  Eigen::Index c = 0;
  for (const auto& label : all_labels(dims.qubits(), dot)) {
    source.col(c) = dot_state_product<Real>(label);
    target.col(c) = dot_state_product<Real>(label_shift(label));
    ++c;
  }
  return target * source.adjoint();
}

/// B_n = G_{n-1} Cyc_n G_n^dagger, multiplied block by block.
template <typename Real = double>
CMatrix<Real> baker_composed(const Dimensions& dims, int dot) {
  detail::require_map_index(dims.qubits(), dot);
  const Eigen::Index dim = dims.dim();
  const Eigen::Index block = Eigen::Index{1} << (dims.qubits() - dot);

  CMatrix<Real> x = CMatrix<Real>::Zero(dim, dim);
  const CMatrix<Real> inner = antiperiodic_dft<Real>(block).adjoint();
  for (Eigen::Index b = 0; b < dim; b += block) x.block(b, b, block, block) = inner;
  ops::apply_cyclic_shift(x, dims.qubits(), dot);

  const CMatrix<Real> outer = antiperiodic_dft<Real>(2 * block);
  CMatrix<Real> out(dim, dim);
  for (Eigen::Index b = 0; b < dim; b += 2 * block) {
    out.middleRows(b, 2 * block).noalias() = outer * x.middleRows(b, 2 * block);
  }
  return out;
}

/// Single-qubit factor of B_N acting on the last slot:
/// u = (1/sqrt2) [[e^{-i pi/4}, e^{i pi/4}], [e^{i pi/4}, e^{-i pi/4}]].
template <typename Real = double>
Matrix2c<Real> last_qubit_unitary() {
  const Real s = Real(1) / std::numbers::sqrt2_v<Real>;
  const auto minus = s * unit_phase<Real>(-1, 8);
  const auto plus = s * unit_phase<Real>(1, 8);
  Matrix2c<Real> u;
  u << minus, plus, plus, minus;
  return u;
}

/// B_N = (u on slot N) Cyc_N as a dense matrix.
template <typename Real = double>
CMatrix<Real> baker_last_closed_form(const Dimensions& dims) {
  CMatrix<Real> m = cyclic_shift_operator<Real>(dims, dims.qubits());
  ops::apply_single_qubit(m, dims.qubits(), dims.qubits(), last_qubit_unitary<Real>());
  return m;
}

template <typename Real>
void apply_baker_N_inplace(CVector<Real>& state) {
  const int qubits = qubits_for_size(state.size());
  ops::apply_cyclic_shift(state, qubits, qubits);
  ops::apply_single_qubit(state, qubits, qubits, last_qubit_unitary<Real>());
}

template <typename Derived>
auto apply_baker_N(const Eigen::MatrixBase<Derived>& state) {
  CVector<typename Derived::RealScalar> out = state;
  apply_baker_N_inplace(out);
  return out;
}

/// G_n^dagger, then the slot rotation, then G_{n-1}; O(D N).
template <typename Real>
void apply_baker_fast_inplace(CVector<Real>& state, int dot) {
  const int qubits = qubits_for_size(state.size());
  detail::require_map_index(qubits, dot);
  apply_partial_transform_inplace(state, dot, Direction::inverse);
  ops::apply_cyclic_shift(state, qubits, dot);
  apply_partial_transform_inplace(state, dot - 1, Direction::forward);
}

template <typename Derived>
auto apply_baker_fast(const Eigen::MatrixBase<Derived>& state, int dot) {
  CVector<typename Derived::RealScalar> out = state;
  apply_baker_fast_inplace(out, dot);
  return out;
}

/// Dense B_n for export: baker_composed up to N = 10, beyond that the
/// columns are produced by the fast path (O(D^2 N) instead of O(D^3)).
template <typename Real = double>
CMatrix<Real> baker_dense(const Dimensions& dims, int dot) {
  if (dims.qubits() <= 10) return baker_composed<Real>(dims, dot);
  detail::require_map_index(dims.qubits(), dot);
  CMatrix<Real> out(dims.dim(), dims.dim());
  for (Eigen::Index j = 0; j < dims.dim(); ++j) {
    CVector<Real> e = CVector<Real>::Zero(dims.dim());
    e(j) = Real(1);
    apply_baker_fast_inplace(e, dot);
    out.col(j) = e;
  }
  return out;
}

template <typename Real>
using StepObserver = std::function<void(int step, const CVector<Real>& state)>;

/// Applies B_n `steps` times with n held fixed. The observer sees step 0
/// (the input) and every subsequent state, in order.
template <typename Real>
CVector<Real> iterate(CVector<Real> state, int dot, int steps, const StepObserver<Real>& observe = {}) {
  if (steps < 0) throw std::invalid_argument("step count must be non-negative");
  detail::require_map_index(qubits_for_size(state.size()), dot);
  if (observe) observe(0, state);
  for (int step = 1; step <= steps; ++step) {
    apply_baker_fast_inplace(state, dot);
    if (observe) observe(step, state);
  }
  return state;
}

}  // namespace qbaker
