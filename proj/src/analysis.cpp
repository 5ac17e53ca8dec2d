#include "qbaker/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbaker/baker.hpp"
#include "qbaker/classical.hpp"
#include "qbaker/fourier.hpp"

namespace qbaker {

std::vector<Eigen::Index> position_support(const VectorXc& state, double tol) {
  if (tol < 0) throw std::invalid_argument("support tolerance must be non-negative");
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < state.size(); ++j) {
    if (std::abs(state(j)) > tol) support.push_back(j);
  }
  return support;
}

LocalizationReport check_strict_localization(const DotLabel& label) {
  const int m = label.qubits() - label.dot();
  const Eigen::Index width = Eigen::Index{1} << m;
  const auto start = static_cast<Eigen::Index>(bits_to_index(label.xbits())) << m;

  const VectorXc psi = dot_state_transform(label);
  LocalizationReport report{label, position_support(psi, 1e-15), 0.0, 0.0, 0.0};

  const double expected = std::pow(2.0, -0.5 * m);
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    const double mod = std::abs(psi(j));
    if (j >= start && j < start + width) {
      report.uniform_modulus_dev = std::max(report.uniform_modulus_dev, std::abs(mod - expected));
    } else {
      report.off_window_max = std::max(report.off_window_max, mod);
    }
  }

  const VectorXc momentum = apply_partial_transform(psi, 0, Direction::inverse);
  const auto lead = static_cast<Eigen::Index>(bits_to_index(label.abits()));
  const Eigen::Index cell = Eigen::Index{1} << label.dot();
  report.window_mass = momentum.segment(lead * cell, cell).squaredNorm();
  return report;
}

double schmidt_entropy(const VectorXc& state, int cut) {
  const int qubits = qubits_for_size(state.size());
  if (cut < 1 || cut > qubits - 1) throw std::out_of_range("cut must lie in [1, N-1]");
  // Column-major view of the row-major 2^cut x 2^{N-cut} amplitude matrix, i.e. its transpose.
  const Eigen::Index rows = Eigen::Index{1} << cut;
  const Eigen::Map<const MatrixXc> amps(state.data(), state.size() / rows, rows);
  Eigen::BDCSVD<MatrixXc> svd(amps);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double w = svd.singularValues()(i) * svd.singularValues()(i);
    if (w > 1e-300) entropy -= w * std::log2(w);
  }
  return std::max(entropy, 0.0);
}

double max_contiguous_cut_entropy(const VectorXc& state) {
  const int qubits = qubits_for_size(state.size());
  if (qubits < 2) throw std::invalid_argument("contiguous cuts need N >= 2");
  double best = 0.0;
  for (int cut = 1; cut < qubits; ++cut) best = std::max(best, schmidt_entropy(state, cut));
  return best;
}

SpectrumReport eigenphases(const MatrixXc& unitary) {
  if (unitary.rows() != unitary.cols() || unitary.rows() == 0) {
    throw std::invalid_argument("eigenphases needs a non-empty square matrix");
  }
  if (unitarity_defect(unitary) > 1e-10) throw std::invalid_argument("matrix is not unitary");

  constexpr double two_pi = 2 * std::numbers::pi;
  Eigen::ComplexEigenSolver<MatrixXc> solver(unitary, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");

  SpectrumReport report;
  for (const auto& lambda : solver.eigenvalues()) {
    report.unit_modulus_dev = std::max(report.unit_modulus_dev, std::abs(std::abs(lambda) - 1.0));
    double phase = std::arg(lambda);
    if (phase < 0) phase += two_pi;
    if (phase >= two_pi) phase -= two_pi;
    report.phases.push_back(phase);
  }
  std::sort(report.phases.begin(), report.phases.end());

  const auto count = report.phases.size();
  const double scale = static_cast<double>(count) / two_pi;
  report.spacings.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double next = i + 1 < count ? report.phases[i + 1] : report.phases.front() + two_pi;
    report.spacings[i] = (next - report.phases[i]) * scale;
  }
  return report;
}

std::vector<CorrespondenceStep> correspondence_trajectory(const DotLabel& label, int steps) {
  if (steps < 0 || steps > label.dot()) throw std::domain_error("steps must lie in [0, n]");
  std::vector<CorrespondenceStep> out;
  DotLabel current = label;
  for (int s = 0; s < steps; ++s) {
    const VectorXc image = apply_baker_fast(dot_state_transform(current), current.dot());
    DotLabel next = label_shift(current);
    const auto amplitude = dot_state_transform(next).dot(image);
    out.push_back({current, next, amplitude, std::norm(amplitude)});
    current = std::move(next);
  }
  return out;
}

}  // namespace qbaker
