#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qbaker/types.hpp"

namespace qbaker {

/// Ordered bits, first element most significant.
class BitVec {
 public:
  BitVec() = default;
  BitVec(std::initializer_list<int> bits);
  explicit BitVec(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::uint64_t bits_to_index(const BitVec& bits);
BitVec index_to_bits(int length, std::uint64_t j);

/// Exact lattice values (j + 1/2) / D.
Rational position_eigenvalue(const Dimensions& dims, std::int64_t j);
Rational momentum_eigenvalue(const Dimensions& dims, std::int64_t k);

/// Symbolic label a_{N-n}...a_1.x_1...x_n of a partially transformed basis
/// state. abits is stored a_1 first; only the text form reverses it.
class DotLabel {
 public:
  DotLabel(BitVec xbits, BitVec abits);

  /// Parses `aaa.xxx`; throws std::invalid_argument on malformed input.
  static DotLabel parse(std::string_view text);

  int qubits() const { return static_cast<int>(x_.size() + a_.size()); }
  int dot() const { return static_cast<int>(x_.size()); }
  const BitVec& xbits() const { return x_; }
  const BitVec& abits() const { return a_; }

  /// Computational index of |x_1...x_n, a_1...a_{N-n}>.
  std::uint64_t register_index() const;

  std::string str() const;

  friend bool operator==(const DotLabel&, const DotLabel&) = default;

 private:
  BitVec x_;
  BitVec a_;
};

/// All 2^N labels with dot position n, ordered by register_index.
std::vector<DotLabel> all_labels(int qubits, int dot);

struct PhasePoint {
  Rational q;
  Rational p;
  Rational qwidth;
  Rational pwidth;
};

/// Phase-space cell centred at q = 0.x_1...x_n1, p = 0.a_1...a_{N-n}1.
PhasePoint label_cell(const DotLabel& label);

}  // namespace qbaker
