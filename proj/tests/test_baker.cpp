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
const cd kI(0, 1);

VectorXc basis_state(int qubits, Eigen::Index j) {
  VectorXc e = VectorXc::Zero(Eigen::Index{1} << qubits);
  e(j) = 1.0;
  return e;
}

MatrixXc u_closed_form() {
  MatrixXc u(2, 2);
  const cd m = std::exp(-kI * kPi / 4.0) / std::sqrt(2.0);
  const cd p = std::exp(kI * kPi / 4.0) / std::sqrt(2.0);
  u << m, p, p, m;
  return u;
}

}  // namespace

TEST(CyclicShift, Examples) {
  EXPECT_LE(max_abs_diff(cyclic_shift_operator(Dimensions(3), 1), MatrixXc::Identity(8, 8)), 0.0);

  MatrixXc swap = MatrixXc::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  EXPECT_LE(max_abs_diff(cyclic_shift_operator(Dimensions(2), 2), swap), 0.0);

  const VectorXc out = cyclic_shift_operator(Dimensions(3), 3) * basis_state(3, 0b110);
  EXPECT_LE(max_abs_diff(out, basis_state(3, 0b101)), 0.0);

  EXPECT_THROW(cyclic_shift_operator(Dimensions(3), 0), std::out_of_range);
  EXPECT_THROW(cyclic_shift_operator(Dimensions(3), 4), std::out_of_range);
}

TEST(CyclicShift, LeavesLowSlotsUntouched) {
  // (x1 x2 x3 | r1 r2) -> (x2 x3 x1 | r1 r2)
  for (std::uint64_t j = 0; j < 32; ++j) {
    const auto bits = index_to_bits(5, j).bits();
    const BitVec expected{bits[1], bits[2], bits[0], bits[3], bits[4]};
    EXPECT_EQ(ops::cyclic_shift_index(5, 3, j), bits_to_index(expected));
  }
}

TEST(BakerMap, SingleQubitIsU) {
  const MatrixXc b = baker_from_basis_map(Dimensions(1), 1);
  EXPECT_LE(max_abs_diff(b, u_closed_form()), 1e-15);
  EXPECT_LE(max_abs_diff(b, MatrixXc(-kI * antiperiodic_dft(2))), 1e-15);
  EXPECT_LE(max_abs_diff(baker_composed(Dimensions(1), 1), b), 1e-15);
}

TEST(BakerMap, SaracenoFormForN1) {
  for (int n = 1; n <= 7; ++n) {
    const Dimensions dims(n);
    const MatrixXc expected = partial_transform(dims, 0) * partial_transform(dims, 1).adjoint();
    EXPECT_LE(max_abs_diff(baker_from_basis_map(dims, 1), expected), 1e-12);
    EXPECT_LE(max_abs_diff(baker_composed(dims, 1), expected), 1e-12);
  }
}

TEST(BakerMap, RoutesAgreeAndAreUnitary) {
  for (int n = 1; n <= 7; ++n) {
    const Dimensions dims(n);
    for (int dot = 1; dot <= n; ++dot) {
      const MatrixXc composed = baker_composed(dims, dot);
      EXPECT_LE(unitarity_defect(composed), 1e-12);
      EXPECT_LE(max_abs_diff(composed, baker_from_basis_map(dims, dot)), 1e-12) << n << "," << dot;
    }
  }
}

TEST(BakerMap, ShiftsTheDot) {
  for (int n = 1; n <= 6; ++n) {
    const Dimensions dims(n);
    for (int dot = 1; dot <= n; ++dot) {
      const MatrixXc b = baker_from_basis_map(dims, dot);
      for (const auto& label : all_labels(n, dot)) {
        const cd amp = dot_state_transform(label_shift(label)).dot(b * dot_state_transform(label));
        ASSERT_LE(std::abs(amp - 1.0), 1e-12) << label.str();
      }
    }
  }
}

TEST(BakerMap, ImagesAreDotStatesOnStretchedCells) {
  for (int n = 2; n <= 5; ++n) {
    for (int dot = 1; dot <= n; ++dot) {
      for (const auto& label : all_labels(n, dot)) {
        const VectorXc image = apply_baker_fast(dot_state_transform(label), dot);
        // Find the dot-(n-1) basis state the image coincides with.
        int hits = 0;
        for (const auto& candidate : all_labels(n, dot - 1)) {
          if (std::abs(std::abs(dot_state_transform(candidate).dot(image)) - 1.0) < 1e-10) {
            ++hits;
            EXPECT_EQ(label_cell(candidate).qwidth, label_cell(label).qwidth * 2);
            EXPECT_EQ(label_cell(candidate).pwidth, label_cell(label).pwidth / 2);
          }
        }
        ASSERT_EQ(hits, 1) << label.str();
      }
    }
  }
}

TEST(LastQubit, Columns) {
  const auto u = last_qubit_unitary();
  const double s = 1.0 / std::sqrt(2.0);
  // e^{i pi x}(e^{-i pi/4} e^{-i pi x/2}|0> + e^{i pi/4} e^{i pi x/2}|1>)/sqrt2
  for (int x = 0; x <= 1; ++x) {
    const cd pre = std::exp(kI * kPi * double(x));
    EXPECT_LE(std::abs(u(0, x) - pre * s * std::exp(-kI * kPi / 4.0) * std::exp(-kI * kPi * (x / 2.0))), 1e-15);
    EXPECT_LE(std::abs(u(1, x) - pre * s * std::exp(kI * kPi / 4.0) * std::exp(kI * kPi * (x / 2.0))), 1e-15);
  }
  EXPECT_LE(unitarity_defect(u), 1e-15);
}

TEST(LastQubit, ClosedFormEqualsComposed) {
  for (int n = 1; n <= 8; ++n) {
    const Dimensions dims(n);
    EXPECT_LE(max_abs_diff(baker_last_closed_form(dims), baker_composed(dims, n)), 1e-12);
  }
}

TEST(ApplyBakerN, SingleQubit) {
  const VectorXc out = apply_baker_N(basis_state(1, 0));
  EXPECT_LE(std::abs(out(0) - std::exp(-kI * kPi / 4.0) / std::sqrt(2.0)), 1e-15);
  EXPECT_LE(std::abs(out(1) - std::exp(kI * kPi / 4.0) / std::sqrt(2.0)), 1e-15);
}

TEST(ApplyBakerN, MatchesDenseMap) {
  Rng rng(5);
  for (int n = 1; n <= 8; ++n) {
    const MatrixXc dense = baker_from_basis_map(Dimensions(n), n);
    for (int trial = 0; trial < 5; ++trial) {
      const VectorXc psi = random_state(n, rng);
      ASSERT_LE(max_abs_diff(apply_baker_N(psi), dense * psi), 1e-10);
    }
  }
}

TEST(ApplyBakerN, DoesNotEntangleProductStates) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    ASSERT_LE(max_contiguous_cut_entropy(apply_baker_N(random_product_state(6, rng))), 1e-10);
  }
}

TEST(ApplyBakerFast, EntanglesForSmallDot) {
  Rng rng(23);
  double best = 0.0;
  for (Eigen::Index j = 0; j < 8; ++j) best = std::max(best, max_contiguous_cut_entropy(apply_baker_fast(basis_state(3, j), 1)));
  for (int trial = 0; trial < 20; ++trial) {
    best = std::max(best, max_contiguous_cut_entropy(apply_baker_fast(random_product_state(3, rng), 1)));
  }
  EXPECT_GE(best, 0.1);
}

TEST(ApplyBakerFast, MatchesDense) {
  Rng rng(29);
  for (int n = 1; n <= 8; ++n) {
    for (int dot = 1; dot <= n; ++dot) {
      const MatrixXc dense = baker_composed(Dimensions(n), dot);
      for (int trial = 0; trial < 5; ++trial) {
        const VectorXc psi = random_state(n, rng);
        ASSERT_LE(max_abs_diff(apply_baker_fast(psi, dot), dense * psi), 1e-10);
      }
    }
  }
}

TEST(ApplyBakerFast, DotBasisFidelity) {
  for (const char* text : {"01.10", ".101", "1.1", "0110.01"}) {
    const auto label = DotLabel::parse(text);
    const VectorXc image = apply_baker_fast(dot_state_transform(label), label.dot());
    EXPECT_GE(std::norm(dot_state_transform(label_shift(label)).dot(image)), 1.0 - 1e-10) << text;
  }
}

TEST(ApplyBakerFast, LargeRegisterPreservesNorm) {
  Rng rng(31);
  VectorXc psi = random_state(16, rng);
  apply_baker_fast_inplace(psi, 3);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
}

TEST(ApplyBakerFast, RejectsBadIndex) {
  VectorXc psi = basis_state(3, 0);
  EXPECT_THROW(apply_baker_fast(psi, 0), std::out_of_range);
  EXPECT_THROW(apply_baker_fast(psi, 4), std::out_of_range);
}

TEST(Iterate, ZeroStepsReturnsInput) {
  Rng rng(37);
  const VectorXc psi = random_state(4, rng);
  int calls = 0;
  const VectorXc out = iterate<double>(psi, 2, 0, [&](int step, const VectorXc&) {
    EXPECT_EQ(step, 0);
    ++calls;
  });
  EXPECT_EQ(calls, 1);
  EXPECT_LE(max_abs_diff(out, psi), 0.0);
}

TEST(Iterate, FirstStepFollowsLabelShift) {
  const auto label = DotLabel::parse("01.1");
  std::vector<VectorXc> seen;
  iterate<double>(dot_state_transform(label), 1, 3, [&](int, const VectorXc& s) { seen.push_back(s); });
  ASSERT_EQ(seen.size(), 4u);
  EXPECT_GE(std::norm(dot_state_transform(DotLabel::parse("011.")).dot(seen[1])), 1.0 - 1e-10);
}

TEST(Iterate, ObserverSeesEveryStepInOrder) {
  Rng rng(41);
  const VectorXc psi = random_state(5, rng);
  std::vector<int> steps;
  VectorXc manual = psi;
  const VectorXc out = iterate<double>(psi, 2, 4, [&](int step, const VectorXc& s) {
    steps.push_back(step);
    if (step > 0) apply_baker_fast_inplace(manual, 2);
    EXPECT_LE(max_abs_diff(s, manual), 1e-14);
  });
  EXPECT_EQ(steps, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_LE(max_abs_diff(out, manual), 1e-14);
}

TEST(Iterate, HundredStepsKeepNorm) {
  Rng rng(43);
  const VectorXc out = iterate<double>(random_state(10, rng), 1, 100);
  EXPECT_NEAR(out.norm(), 1.0, 1e-8);
}

TEST(BakerDense, MaterializedColumnsMatchFastPath) {
  Rng rng(47);
  const Dimensions dims(11);
  const MatrixXc dense = baker_dense(dims, 4);
  const VectorXc psi = random_state(11, rng);
  EXPECT_LE(max_abs_diff(dense * psi, apply_baker_fast(psi, 4)), 1e-10);
  EXPECT_LE(unitarity_defect(dense), 1e-10);
}
