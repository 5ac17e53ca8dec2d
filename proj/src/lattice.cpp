#include "qbaker/lattice.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace qbaker {

double Dimensions::hbar() const {
  return 1.0 / (2.0 * std::numbers::pi * static_cast<double>(dim()));
}

int qubits_for_size(Eigen::Index size) {
  if (size < 2 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("state length must be 2^N with N >= 1");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < size) ++n;
  return n;
}

BitVec::BitVec(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitVec::BitVec(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
  }
}

std::uint64_t bits_to_index(const BitVec& bits) {
  if (bits.size() > 63) throw std::invalid_argument("bit string longer than 63");
  std::uint64_t j = 0;
  for (auto b : bits.bits()) j = (j << 1) | b;
  return j;
}

BitVec index_to_bits(int length, std::uint64_t j) {
  if (length < 0 || length > 63 || j >= (std::uint64_t{1} << length)) {
    throw std::out_of_range("index does not fit in the requested bit length");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int l = length - 1; l >= 0; --l) {
    bits[static_cast<std::size_t>(l)] = static_cast<std::uint8_t>(j & 1u);
    j >>= 1;
  }
  return BitVec(std::move(bits));
}

namespace {

Rational half_offset_point(const Dimensions& dims, std::int64_t index) {
  if (index < 0 || index >= dims.dim()) throw std::out_of_range("lattice index out of range");
  return Rational(2 * index + 1, 2 * static_cast<std::int64_t>(dims.dim()));
}

// 0.b_1...b_k1 in binary.
Rational guarded_fraction(const BitVec& bits) {
  const auto k = static_cast<std::int64_t>(bits.size());
  const std::int64_t num = (static_cast<std::int64_t>(bits_to_index(bits)) << 1) | 1;
  return Rational(num, std::int64_t{1} << (k + 1));
}

}  // namespace

Rational position_eigenvalue(const Dimensions& dims, std::int64_t j) {
  return half_offset_point(dims, j);
}

Rational momentum_eigenvalue(const Dimensions& dims, std::int64_t k) {
  return half_offset_point(dims, k);
}

DotLabel::DotLabel(BitVec xbits, BitVec abits) : x_(std::move(xbits)), a_(std::move(abits)) {
  if (x_.size() + a_.size() < 1 || x_.size() + a_.size() > Dimensions::kMaxQubits) {
    throw std::invalid_argument("dot label must carry between 1 and 30 bits");
  }
}

DotLabel DotLabel::parse(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || text.find('.', dot + 1) != std::string_view::npos) {
    throw std::invalid_argument("dot label needs exactly one '.': " + std::string(text));
  }
  auto read = [&](std::string_view part) {
    std::vector<std::uint8_t> bits;
    for (char c : part) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("dot label alphabet is {0,1}: " + std::string(text));
      }
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
  };
  auto left = read(text.substr(0, dot));
  std::reverse(left.begin(), left.end());
  return DotLabel(BitVec(read(text.substr(dot + 1))), BitVec(std::move(left)));
}

std::uint64_t DotLabel::register_index() const {
  return (bits_to_index(x_) << a_.size()) | bits_to_index(a_);
}

std::string DotLabel::str() const {
  std::string out;
  out.reserve(a_.size() + x_.size() + 1);
  for (auto it = a_.bits().rbegin(); it != a_.bits().rend(); ++it) out.push_back(char('0' + *it));
  out.push_back('.');
  for (auto b : x_.bits()) out.push_back(char('0' + b));
  return out;
}

std::vector<DotLabel> all_labels(int qubits, int dot) {
  if (qubits < 1 || qubits > 20 || dot < 0 || dot > qubits) {
    throw std::out_of_range("label enumeration needs 1 <= N <= 20 and 0 <= n <= N");
  }
  const int m = qubits - dot;
  std::vector<DotLabel> labels;
  labels.reserve(std::size_t{1} << qubits);
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << qubits); ++j) {
    labels.emplace_back(index_to_bits(dot, j >> m), index_to_bits(m, j & ((std::uint64_t{1} << m) - 1)));
  }
  return labels;
}

PhasePoint label_cell(const DotLabel& label) {
  const int n = label.dot();
  const int m = label.qubits() - n;
  return PhasePoint{guarded_fraction(label.xbits()), guarded_fraction(label.abits()),
                    Rational(1, std::int64_t{1} << n), Rational(1, std::int64_t{1} << m)};
}

}  // namespace qbaker
