#include "qbaker/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qbaker {

SymbolString SymbolString::parse(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || text.find('.', dot + 1) != std::string_view::npos) {
    throw std::invalid_argument("symbol string needs exactly one '.'");
  }
  auto read = [](std::string_view part) {
    std::vector<std::uint8_t> bits;
    for (char c : part) {
      if (c != '0' && c != '1') throw std::invalid_argument("symbol alphabet is {0,1}");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
  };
  auto left = read(text.substr(0, dot));
  std::reverse(left.begin(), left.end());
  return SymbolString{BitVec(std::move(left)), BitVec(read(text.substr(dot + 1)))};
}

std::string SymbolString::str() const {
  std::string out;
  for (auto it = left.bits().rbegin(); it != left.bits().rend(); ++it) out.push_back(char('0' + *it));
  out.push_back('.');
  for (auto b : right.bits()) out.push_back(char('0' + b));
  return out;
}

namespace {

// 0.b_1 b_2 ... in binary; window length is capped so the denominator fits.
Rational binary_fraction(const BitVec& bits) {
  if (bits.size() > 60) throw std::invalid_argument("symbol window longer than 60 bits");
  return Rational(static_cast<std::int64_t>(bits_to_index(bits)),
                  std::int64_t{1} << bits.size());
}

}  // namespace

std::pair<Rational, Rational> decode(const SymbolString& s) {
  return {binary_fraction(s.right), binary_fraction(s.left)};
}

SymbolString shift(const SymbolString& s) {
  if (s.right.empty()) throw std::domain_error("cannot shift: right window exhausted");
  std::vector<std::uint8_t> left;
  left.reserve(s.left.size() + 1);
  left.push_back(s.right.bits().front());
  left.insert(left.end(), s.left.bits().begin(), s.left.bits().end());
  std::vector<std::uint8_t> right(s.right.bits().begin() + 1, s.right.bits().end());
  return SymbolString{BitVec(std::move(left)), BitVec(std::move(right))};
}

std::pair<Rational, Rational> geometric_baker(const Rational& q, const Rational& p) {
  const Rational zero(0), one(1);
  if (q < zero || q >= one || p < zero || p >= one) {
    throw std::domain_error("geometric_baker expects a point of the unit square");
  }
  const Rational stretched = q * 2;
  const std::int64_t half = stretched >= one ? 1 : 0;
  return {stretched - half, (p + half) / 2};
}

DotLabel label_shift(const DotLabel& label) {
  if (label.dot() == 0) throw std::domain_error("label_shift needs n >= 1");
  const auto& x = label.xbits().bits();
  const auto& a = label.abits().bits();
  std::vector<std::uint8_t> new_a;
  new_a.reserve(a.size() + 1);
  new_a.push_back(x.front());
  new_a.insert(new_a.end(), a.begin(), a.end());
  return DotLabel(BitVec(std::vector<std::uint8_t>(x.begin() + 1, x.end())), BitVec(std::move(new_a)));
}

SymbolString to_symbol_string(const DotLabel& label) {
  return SymbolString{label.abits(), label.xbits()};
}

}  // namespace qbaker
