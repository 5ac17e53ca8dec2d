#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace qbaker {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using Matrix2c = Eigen::Matrix<std::complex<Real>, 2, 2>;

using MatrixXc = CMatrix<double>;
using VectorXc = CVector<double>;

/// Exact dyadic values (lattice points, decoded symbol strings).
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Hilbert-space size of an N-qubit register, D = 2^N, with 2*pi*hbar*D = 1.
class Dimensions {
 public:
  static constexpr int kMaxQubits = 30;

  explicit Dimensions(int qubits) : n_(qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
      throw std::invalid_argument("qubit count must lie in [1, 30]");
    }
  }

  int qubits() const { return n_; }
  Eigen::Index dim() const { return Eigen::Index{1} << n_; }
  double hbar() const;

  friend bool operator==(const Dimensions&, const Dimensions&) = default;

 private:
  int n_;
};

/// Qubit count of a state of the given length; throws unless it is 2^N, N >= 1.
int qubits_for_size(Eigen::Index size);

}  // namespace qbaker
