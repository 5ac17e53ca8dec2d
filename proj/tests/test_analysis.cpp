#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qbaker/analysis.hpp"
#include "qbaker/baker.hpp"
#include "qbaker/sampling.hpp"

using namespace qbaker;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Entropy from the eigenvalues of the reduced density matrix rho_A = M M^+.
double entropy_oracle(const VectorXc& state, int cut) {
  const int qubits = qubits_for_size(state.size());
  const Eigen::Index rows = Eigen::Index{1} << cut;
  const Eigen::Index cols = Eigen::Index{1} << (qubits - cut);
  MatrixXc m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = state(r * cols + c);
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(m * m.adjoint());
  double s = 0.0;
  for (double w : solver.eigenvalues()) {
    if (w > 1e-300) s -= w * std::log2(w);
  }
  return s;
}

Matrix2c<double> random_local(Rng& rng) {
  std::normal_distribution<double> g;
  Matrix2c<double> a;
  for (int i = 0; i < 4; ++i) a(i / 2, i % 2) = {g(rng), g(rng)};
  return Eigen::HouseholderQR<Matrix2c<double>>(a).householderQ();
}

double circular_distance(double a, double b) { return std::abs(std::remainder(a - b, 2 * kPi)); }

}  // namespace

TEST(PositionSupport, Examples) {
  const auto dot = dot_state_transform(DotLabel(BitVec{1, 0}, BitVec{0}));
  EXPECT_EQ(position_support(dot, 1e-12), (std::vector<Eigen::Index>{4, 5}));

  VectorXc q0 = VectorXc::Zero(8);
  q0(0) = 1.0;
  EXPECT_EQ(position_support(q0, 1e-12), std::vector<Eigen::Index>{0});

  EXPECT_EQ(position_support(dot_state_transform(DotLabel::parse("0110.")), 1e-12).size(), 16u);
  EXPECT_THROW(position_support(q0, -1.0), std::invalid_argument);
}

TEST(StrictLocalization, Examples) {
  const auto r = check_strict_localization(DotLabel(BitVec{1, 0}, BitVec{0}));
  EXPECT_EQ(r.support, (std::vector<Eigen::Index>{4, 5}));
  EXPECT_LE(r.uniform_modulus_dev, 1e-12);
  EXPECT_EQ(r.off_window_max, 0.0);

  for (const char* text : {".00", ".01", ".10", ".11"}) {
    const auto p = check_strict_localization(DotLabel::parse(text));
    EXPECT_EQ(p.support.size(), 1u);
    EXPECT_LE(p.uniform_modulus_dev, 1e-15);
    EXPECT_NEAR(p.window_mass, 1.0, 1e-12);  // no momentum bits: the window is everything
  }
}

TEST(StrictLocalization, AllLabelsUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (int dot = 0; dot <= n; ++dot) {
      for (const auto& label : all_labels(n, dot)) {
        const auto r = check_strict_localization(label);
        ASSERT_LE(r.off_window_max, 1e-15);
        ASSERT_LE(r.uniform_modulus_dev, 1e-12);
        ASSERT_EQ(r.support.size(), std::size_t{1} << (n - dot));
        ASSERT_EQ(static_cast<std::uint64_t>(r.support.front()) >> (n - dot), bits_to_index(label.xbits()));
      }
    }
  }
}

// Snapshots from tests/oracles/window_mass.py (numpy, dense G_n and G_0).
TEST(StrictLocalization, WindowMassSnapshots) {
  EXPECT_NEAR(check_strict_localization(DotLabel::parse("0.0")).window_mass, 0.8535533905932737, 1e-12);
  EXPECT_NEAR(check_strict_localization(DotLabel::parse("0.0")).window_mass, (2.0 + std::sqrt(2.0)) / 4.0, 1e-12);
  EXPECT_NEAR(check_strict_localization(DotLabel::parse("10.1")).window_mass, 0.8210669490340053, 1e-12);
  EXPECT_NEAR(check_strict_localization(DotLabel::parse("01.01")).window_mass, 0.7928918686347808, 1e-12);
  EXPECT_NEAR(check_strict_localization(DotLabel::parse("10.110")).window_mass, 0.7864048518509031, 1e-12);
  EXPECT_NEAR(check_strict_localization(DotLabel::parse("1100.10")).window_mass, 0.7829675107507542, 1e-12);
}

TEST(SchmidtEntropy, ProductAndBell) {
  VectorXc zero = VectorXc::Zero(4);
  zero(0) = 1.0;
  EXPECT_NEAR(schmidt_entropy(zero, 1), 0.0, 1e-15);

  VectorXc bell = VectorXc::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(schmidt_entropy(bell, 1), 1.0, 1e-12);

  EXPECT_THROW(schmidt_entropy(bell, 0), std::out_of_range);
  EXPECT_THROW(schmidt_entropy(bell, 2), std::out_of_range);
}

TEST(SchmidtEntropy, MatchesReducedDensityOracle) {
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const VectorXc image = apply_baker_fast(random_product_state(3, rng), 1);
    for (int cut = 1; cut <= 2; ++cut) {
      const double s = schmidt_entropy(image, cut);
      EXPECT_GE(s, 0.0);
      EXPECT_NEAR(s, entropy_oracle(image, cut), 1e-10);
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    const VectorXc psi = random_state(7, rng);
    for (int cut = 1; cut <= 6; ++cut) {
      const double s = schmidt_entropy(psi, cut);
      EXPECT_NEAR(s, entropy_oracle(psi, cut), 1e-10);
      EXPECT_LE(s, std::min(cut, 7 - cut) + 1e-12);
    }
  }
}

TEST(SchmidtEntropy, InvariantUnderLocalUnitaries) {
  Rng rng(61);
  const VectorXc psi = random_state(6, rng);
  VectorXc rotated = psi;
  for (int slot = 1; slot <= 6; ++slot) ops::apply_single_qubit(rotated, 6, slot, random_local(rng));
  for (int cut = 1; cut <= 5; ++cut) {
    EXPECT_NEAR(schmidt_entropy(rotated, cut), schmidt_entropy(psi, cut), 1e-10);
  }
}

TEST(MaxCutEntropy, BasisStatesAndErrors) {
  for (Eigen::Index j = 0; j < 16; ++j) {
    VectorXc e = VectorXc::Zero(16);
    e(j) = 1.0;
    EXPECT_NEAR(max_contiguous_cut_entropy(e), 0.0, 1e-15);
  }
  EXPECT_THROW(max_contiguous_cut_entropy(VectorXc::Ones(2) / std::sqrt(2.0)), std::invalid_argument);
}

TEST(Eigenphases, IdentityTimesI) {
  const auto r = eigenphases(MatrixXc(cd(0, 1) * MatrixXc::Identity(8, 8)));
  ASSERT_EQ(r.phases.size(), 8u);
  for (double p : r.phases) EXPECT_NEAR(p, kPi / 2, 1e-12);
}

TEST(Eigenphases, SingleQubitBaker) {
  const auto r = eigenphases(baker_composed(Dimensions(1), 1));
  ASSERT_EQ(r.phases.size(), 2u);
  const double a = circular_distance(r.phases[0], 0.0) + circular_distance(r.phases[1], 1.5 * kPi);
  const double b = circular_distance(r.phases[1], 0.0) + circular_distance(r.phases[0], 1.5 * kPi);
  EXPECT_LE(std::min(a, b), 1e-10);
}

TEST(Eigenphases, SortedSpacingsAndUnitCircle) {
  const auto r = eigenphases(baker_composed(Dimensions(6), 1));
  EXPECT_LE(r.unit_modulus_dev, 1e-10);
  ASSERT_EQ(r.spacings.size(), r.phases.size());
  EXPECT_TRUE(std::is_sorted(r.phases.begin(), r.phases.end()));
  EXPECT_GE(r.phases.front(), 0.0);
  EXPECT_LT(r.phases.back(), 2 * kPi);
  double mean = 0.0;
  for (double s : r.spacings) mean += s;
  EXPECT_NEAR(mean / double(r.spacings.size()), 1.0, 1e-9);
}

TEST(Eigenphases, RoutesShareSpectrum) {
  for (int n = 1; n <= 6; ++n) {
    for (int dot = 1; dot <= n; ++dot) {
      const auto a = eigenphases(baker_composed(Dimensions(n), dot));
      const auto b = eigenphases(baker_from_basis_map(Dimensions(n), dot));
      EXPECT_LE(a.unit_modulus_dev, 1e-10);
      for (std::size_t i = 0; i < a.phases.size(); ++i) {
        // Compare each phase with the closest one of the other route.
        double best = 1e9;
        for (double q : b.phases) best = std::min(best, circular_distance(a.phases[i], q));
        ASSERT_LE(best, 1e-9);
      }
    }
  }
}

TEST(Eigenphases, RejectsNonUnitary) {
  EXPECT_THROW(eigenphases(MatrixXc::Identity(4, 4) * 1.01), std::invalid_argument);
}

TEST(Correspondence, ThreeStepsFromPositionState) {
  const auto steps = correspondence_trajectory(DotLabel::parse(".101"), 3);
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0].to.str(), "1.01");
  EXPECT_EQ(steps[1].to.str(), "10.1");
  EXPECT_EQ(steps[2].to.str(), "101.");
  for (const auto& s : steps) EXPECT_GE(s.overlap, 1.0 - 1e-10);
}

TEST(Correspondence, ZeroStepsAndTooMany) {
  EXPECT_TRUE(correspondence_trajectory(DotLabel::parse("1.01"), 0).empty());
  EXPECT_THROW(correspondence_trajectory(DotLabel::parse("1.01"), 3), std::domain_error);
}

TEST(Correspondence, AllLabelsUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    for (int dot = 0; dot <= n; ++dot) {
      for (const auto& label : all_labels(n, dot)) {
        const auto steps = correspondence_trajectory(label, dot);
        ASSERT_EQ(steps.size(), static_cast<std::size_t>(dot));
        for (const auto& s : steps) {
          ASSERT_GE(s.overlap, 1.0 - 1e-10) << label.str();
          ASSERT_LE(std::abs(s.amplitude - 1.0), 1e-10);
        }
      }
    }
  }
}
