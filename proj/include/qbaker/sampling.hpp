#pragma once

#include <random>

#include "qbaker/types.hpp"

namespace qbaker {

using Rng = std::mt19937_64;

/// Normalized state with i.i.d. complex Gaussian amplitudes.
inline VectorXc random_state(int qubits, Rng& rng) {
  std::normal_distribution<double> gauss;
  VectorXc v(Eigen::Index{1} << qubits);
  for (auto& z : v) z = {gauss(rng), gauss(rng)};
  return v.normalized();
}

/// Tensor product of independent random single-qubit states.
inline VectorXc random_product_state(int qubits, Rng& rng) {
  std::normal_distribution<double> gauss;
  VectorXc v = VectorXc::Ones(1);
  for (int s = 0; s < qubits; ++s) {
    Eigen::Vector2cd q(std::complex<double>(gauss(rng), gauss(rng)),
                       std::complex<double>(gauss(rng), gauss(rng)));
    q.normalize();
    VectorXc next(v.size() * 2);
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      next(2 * j) = v(j) * q(0);
      next(2 * j + 1) = v(j) * q(1);
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace qbaker
