#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qbaker/classical.hpp"

using namespace qbaker;

namespace {

SymbolString window(BitVec left, BitVec right) { return SymbolString{std::move(left), std::move(right)}; }

SymbolString random_window(std::mt19937_64& rng, int max_side, bool right_nonempty) {
  std::uniform_int_distribution<int> len(0, max_side), bit(0, 1);
  std::vector<std::uint8_t> l(static_cast<std::size_t>(len(rng)));
  std::vector<std::uint8_t> r(static_cast<std::size_t>(std::max(len(rng), right_nonempty ? 1 : 0)));
  for (auto& b : l) b = static_cast<std::uint8_t>(bit(rng));
  for (auto& b : r) b = static_cast<std::uint8_t>(bit(rng));
  return window(BitVec(l), BitVec(r));
}

}  // namespace

TEST(Decode, Examples) {
  EXPECT_EQ(decode(window({0}, {1, 0, 1})), std::make_pair(Rational(5, 8), Rational(0)));
  EXPECT_EQ(decode(window({}, {})), std::make_pair(Rational(0), Rational(0)));
  EXPECT_EQ(decode(window({1}, {1})), std::make_pair(Rational(1, 2), Rational(1, 2)));
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(window({0}, {1, 0, 1})), window({1, 0}, {0, 1}));
  EXPECT_EQ(shift(window({}, {1})), window({1}, {}));
  EXPECT_EQ(decode(shift(window({0}, {1, 0, 1}))), std::make_pair(Rational(1, 4), Rational(1, 2)));
  EXPECT_THROW(shift(window({1, 1}, {})), std::domain_error);
}

TEST(GeometricBaker, Examples) {
  EXPECT_EQ(geometric_baker(Rational(5, 8), Rational(0)), std::make_pair(Rational(1, 4), Rational(1, 2)));
  EXPECT_EQ(geometric_baker(Rational(0), Rational(0)), std::make_pair(Rational(0), Rational(0)));
  EXPECT_EQ(geometric_baker(Rational(1, 4), Rational(1, 2)), std::make_pair(Rational(1, 2), Rational(1, 4)));
  EXPECT_THROW(geometric_baker(Rational(1), Rational(0)), std::domain_error);
}

TEST(GeometricBaker, AgreesWithShiftOnRandomWindows) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = random_window(rng, 32, true);
    const auto [q, p] = decode(s);
    ASSERT_EQ(decode(shift(s)), geometric_baker(q, p)) << s.str();
  }
}

TEST(Shift, InjectiveOnFixedLengthWindows) {
  // All windows with |left| = 2, |right| = 3.
  std::set<std::string> images;
  for (std::uint64_t j = 0; j < 32; ++j) {
    const auto bits = index_to_bits(5, j);
    const auto& b = bits.bits();
    const SymbolString s{BitVec(std::vector<std::uint8_t>(b.begin(), b.begin() + 2)),
                         BitVec(std::vector<std::uint8_t>(b.begin() + 2, b.end()))};
    images.insert(shift(s).str());
  }
  EXPECT_EQ(images.size(), 32u);
}

TEST(SymbolString, TextForm) {
  const auto s = SymbolString::parse("01.101");
  EXPECT_EQ(s.left, BitVec({1, 0}));  // s_0 = 1, s_{-1} = 0
  EXPECT_EQ(s.right, BitVec({1, 0, 1}));
  EXPECT_EQ(s.str(), "01.101");
  EXPECT_THROW(SymbolString::parse("01101"), std::invalid_argument);
}

TEST(LabelShift, Examples) {
  EXPECT_EQ(label_shift(DotLabel::parse("01.10")).str(), "011.0");
  EXPECT_EQ(label_shift(DotLabel::parse(".1")).str(), "1.");
  EXPECT_EQ(label_shift(DotLabel::parse("1.01")).str(), "10.1");
  EXPECT_THROW(label_shift(DotLabel::parse("101.")), std::domain_error);
}

TEST(LabelShift, MatchesSymbolShiftForAllLabels) {
  for (int n = 1; n <= 8; ++n) {
    for (int dot = 1; dot <= n; ++dot) {
      for (const auto& label : all_labels(n, dot)) {
        const auto shifted = label_shift(label);
        ASSERT_EQ(shifted.dot(), dot - 1);
        ASSERT_EQ(to_symbol_string(shifted), shift(to_symbol_string(label))) << label.str();
      }
    }
  }
}

TEST(LabelShift, CellStretchesPositionAndSqueezesMomentum) {
  for (int n = 1; n <= 6; ++n) {
    for (int dot = 1; dot <= n; ++dot) {
      for (const auto& label : all_labels(n, dot)) {
        const auto before = label_cell(label);
        const auto after = label_cell(label_shift(label));
        ASSERT_EQ(after.qwidth, before.qwidth * 2);
        ASSERT_EQ(after.pwidth, before.pwidth / 2);
      }
    }
  }
}
