#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "qbaker/lattice.hpp"
#include "qbaker/types.hpp"

namespace qbaker {

enum class Direction { forward, inverse };

/// exp(2 pi i * num / den), with num reduced mod den before evaluation.
template <typename Real = double>
std::complex<Real> unit_phase(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(num) / Real(den);
  return std::polar(Real(1), angle);
}

template <typename Derived>
typename Derived::RealScalar unitarity_defect(const Eigen::MatrixBase<Derived>& m) {
  const auto gram = (m.adjoint() * m).eval();
  return (gram - decltype(gram)::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar max_abs_diff(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

namespace detail {

inline int log2_exact(std::int64_t size) {
  if (size < 1 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("transform size must be a power of two");
  }
  int m = 0;
  while ((std::int64_t{1} << m) < size) ++m;
  return m;
}

inline void require_dot(int qubits, int dot) {
  if (dot < 0 || dot > qubits) throw std::out_of_range("dot position must lie in [0, N]");
}

// Radix-2 DIT transform, unnormalized: out[x] = sum_a exp(sign 2 pi i x a / M) in[a].
template <typename Real>
void fft_inplace(std::span<std::complex<Real>> v, int sign,
                 const std::vector<std::complex<Real>>& twiddle) {
  const std::size_t size = v.size();
  for (std::size_t i = 1, j = 0; i < size; ++i) {
    std::size_t bit = size >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= size; len <<= 1) {
    const std::size_t stride = size / len;
    for (std::size_t start = 0; start < size; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        auto w = twiddle[k * stride];
        if (sign < 0) w = std::conj(w);
        const auto even = v[start + k];
        const auto odd = v[start + k + len / 2] * w;
        v[start + k] = even + odd;
        v[start + k + len / 2] = even - odd;
      }
    }
  }
}

}  // namespace detail

/// Half-integer Fourier kernel K[x, a] = exp(2 pi i (x + 1/2)(a + 1/2) / M) / sqrt(M).
template <typename Real = double>
CMatrix<Real> antiperiodic_dft(std::int64_t size) {
  detail::log2_exact(size);
  const Real norm = Real(1) / std::sqrt(Real(size));
  CMatrix<Real> k(size, size);
  for (std::int64_t a = 0; a < size; ++a) {
    for (std::int64_t x = 0; x < size; ++x) {
      k(x, a) = norm * unit_phase<Real>((2 * x + 1) * (2 * a + 1), 4 * size);
    }
  }
  return k;
}

/// G_n = I_{2^n} (x) K_{2^{N-n}}: the kernel on the N - n least significant qubits.
template <typename Real = double>
CMatrix<Real> partial_transform(const Dimensions& dims, int dot) {
  detail::require_dot(dims.qubits(), dot);
  const auto block = Eigen::Index{1} << (dims.qubits() - dot);
  const CMatrix<Real> kernel = antiperiodic_dft<Real>(block);
  CMatrix<Real> g = CMatrix<Real>::Zero(dims.dim(), dims.dim());
  for (Eigen::Index b = 0; b < dims.dim(); b += block) g.block(b, b, block, block) = kernel;
  return g;
}

/// Applies G_n (or its adjoint) in O(D (N - n)) using
/// K_M = e^{i pi/(2M)} diag(e^{i pi x/M}) DFT_M diag(e^{i pi a/M}).
template <typename Real>
void apply_partial_transform_inplace(CVector<Real>& state, int dot, Direction dir) {
  const int qubits = qubits_for_size(state.size());
  detail::require_dot(qubits, dot);
  const std::int64_t size = std::int64_t{1} << (qubits - dot);
  const int sign = dir == Direction::forward ? 1 : -1;

  std::vector<std::complex<Real>> twiddle(static_cast<std::size_t>(size));
  std::vector<std::complex<Real>> half_step(static_cast<std::size_t>(size));
  for (std::int64_t k = 0; k < size; ++k) {
    twiddle[k] = unit_phase<Real>(k, size);
    half_step[k] = unit_phase<Real>(sign * k, 2 * size);
  }
  const std::complex<Real> global =
      unit_phase<Real>(sign, 4 * size) / std::sqrt(Real(size));

  for (Eigen::Index start = 0; start < state.size(); start += size) {
    std::span<std::complex<Real>> block(state.data() + start, static_cast<std::size_t>(size));
    for (std::int64_t k = 0; k < size; ++k) block[k] *= half_step[k];
    detail::fft_inplace<Real>(block, sign, twiddle);
    for (std::int64_t k = 0; k < size; ++k) block[k] *= half_step[k] * global;
  }
}

template <typename Derived>
auto apply_partial_transform(const Eigen::MatrixBase<Derived>& state, int dot, Direction dir) {
  using Real = typename Derived::RealScalar;
  CVector<Real> out = state;
  apply_partial_transform_inplace<Real>(out, dot, dir);
  return out;
}

/// G_n |x_1...x_n, a_1...a_{N-n}>, read off the kernel column.
template <typename Real = double>
CVector<Real> dot_state_transform(const DotLabel& label) {
  const Dimensions dims(label.qubits());
  const int m = dims.qubits() - label.dot();
  const std::int64_t size = std::int64_t{1} << m;
  const auto col = static_cast<std::int64_t>(bits_to_index(label.abits()));
  const auto start = static_cast<Eigen::Index>(bits_to_index(label.xbits())) << m;
  const Real norm = Real(1) / std::sqrt(Real(size));

  CVector<Real> psi = CVector<Real>::Zero(dims.dim());
  for (std::int64_t x = 0; x < size; ++x) {
    psi(start + x) = norm * unit_phase<Real>((2 * x + 1) * (2 * col + 1), 4 * size);
  }
  return psi;
}

/// Same state assembled as a product: position qubits |x_l>, then momentum
/// factors (|0> + e^{2 pi i 0.a_k...a_{N-n}1}|1>)/sqrt2 for k = N-n down to 1,
/// times the overall phase e^{i pi 0.a_1...a_{N-n}1}.
template <typename Real = double>
CVector<Real> dot_state_product(const DotLabel& label) {
  const Dimensions dims(label.qubits());
  const int m = dims.qubits() - label.dot();
  const auto& a = label.abits();

  // Factor on momentum slot l (1-based within the register) carries 0.a_{m-l+1}...a_m 1.
  std::vector<std::complex<Real>> factor(static_cast<std::size_t>(m));
  for (int l = 1; l <= m; ++l) {
    std::int64_t num = 0;
    for (int k = m - l + 1; k <= m; ++k) num = (num << 1) | a[static_cast<std::size_t>(k - 1)];
    num = (num << 1) | 1;
    factor[static_cast<std::size_t>(l - 1)] = unit_phase<Real>(num, std::int64_t{1} << (l + 1));
  }
  const std::int64_t overall_num = (static_cast<std::int64_t>(bits_to_index(a)) << 1) | 1;
  const std::complex<Real> overall = unit_phase<Real>(overall_num, std::int64_t{1} << (m + 2));
  const Real norm = std::pow(Real(2), Real(-m) / 2);

  CVector<Real> psi = CVector<Real>::Zero(dims.dim());
  const auto start = static_cast<Eigen::Index>(bits_to_index(label.xbits())) << m;
  for (std::int64_t y = 0; y < (std::int64_t{1} << m); ++y) {
    std::complex<Real> amp = overall * norm;
    for (int l = 1; l <= m; ++l) {
      if ((y >> (m - l)) & 1) amp *= factor[static_cast<std::size_t>(l - 1)];
    }
    psi(start + y) = amp;
  }
  return psi;
}

/// U = exp(2 pi i q): diagonal in the position basis.
template <typename Real = double>
CMatrix<Real> displacement_U(const Dimensions& dims) {
  CVector<Real> diag(dims.dim());
  for (Eigen::Index j = 0; j < dims.dim(); ++j) diag(j) = unit_phase<Real>(2 * j + 1, 2 * dims.dim());
  return diag.asDiagonal();
}

/// V = exp(-2 pi i p) = G_0 diag(e^{-2 pi i p_k}) G_0^dagger.
template <typename Real = double>
CMatrix<Real> displacement_V(const Dimensions& dims) {
  const CMatrix<Real> g0 = partial_transform<Real>(dims, 0);
  CVector<Real> diag(dims.dim());
  for (Eigen::Index k = 0; k < dims.dim(); ++k) diag(k) = unit_phase<Real>(-(2 * k + 1), 2 * dims.dim());
  return g0 * diag.asDiagonal() * g0.adjoint();
}

}  // namespace qbaker
