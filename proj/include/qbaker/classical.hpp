#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "qbaker/lattice.hpp"

namespace qbaker {

/// Finite window of a bi-infinite binary string ...s_{-1}s_0.s_1s_2...
/// left holds s_0, s_{-1}, ... outward from the dot; right holds s_1, s_2, ...
/// Symbols outside the window decode as 0.
struct SymbolString {
  BitVec left;
  BitVec right;

  static SymbolString parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const SymbolString&, const SymbolString&) = default;
};

/// (q, p) with q = sum_{k>=1} s_k 2^{-k} and p = sum_{k>=0} s_{-k} 2^{-k-1}.
std::pair<Rational, Rational> decode(const SymbolString& s);

/// s'_k = s_{k+1}. Throws std::domain_error when the right window is empty.
SymbolString shift(const SymbolString& s);

/// Stretch q, squeeze p, stack the right half on top of the left.
std::pair<Rational, Rational> geometric_baker(const Rational& q, const Rational& p);

/// Moves the dot one place right: x_1 becomes the new a_1.
/// Throws std::domain_error for n = 0.
DotLabel label_shift(const DotLabel& label);

/// Reads a label as a symbol window; guard context outside the label is 0.
SymbolString to_symbol_string(const DotLabel& label);

}  // namespace qbaker
