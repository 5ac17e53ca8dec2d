#pragma once

#include <complex>
#include <vector>

#include "qbaker/lattice.hpp"
#include "qbaker/types.hpp"

namespace qbaker {

/// Indices j with |amps[j]| > tol.
std::vector<Eigen::Index> position_support(const VectorXc& state, double tol);

struct LocalizationReport {
  DotLabel label;
  std::vector<Eigen::Index> support;
  /// Largest |amp| outside the 2^{N-n} expected window.
  double off_window_max = 0.0;
  /// max | |amp| - 2^{-(N-n)/2} | over the expected window.
  double uniform_modulus_dev = 0.0;
  /// Momentum probability over the 2^n indices whose leading N-n bits are a_1...a_{N-n}.
  double window_mass = 0.0;
};

LocalizationReport check_strict_localization(const DotLabel& label);

/// Base-2 entropy of the squared Schmidt coefficients across slots 1..cut | cut+1..N.
double schmidt_entropy(const VectorXc& state, int cut);

/// max over cut in [1, N-1]; throws for N < 2.
double max_contiguous_cut_entropy(const VectorXc& state);

struct SpectrumReport {
  std::vector<double> phases;  // sorted, in [0, 2 pi)
  double unit_modulus_dev = 0.0;
  /// Gap from each phase to the next one around the circle, scaled to unit mean.
  std::vector<double> spacings;
};

/// Throws std::invalid_argument when the input deviates from unitarity by more than 1e-10.
SpectrumReport eigenphases(const MatrixXc& unitary);

struct CorrespondenceStep {
  DotLabel from;
  DotLabel to;
  std::complex<double> amplitude;  // <dot(to)| B_{n(from)} |dot(from)>
  double overlap = 0.0;            // |amplitude|^2
};

/// Follows the label through `steps` applications of B_{current n} and
/// compares each quantum image with the classically shifted label.
/// Throws std::domain_error for steps > n.
std::vector<CorrespondenceStep> correspondence_trajectory(const DotLabel& label, int steps);

}  // namespace qbaker
