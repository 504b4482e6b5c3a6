#pragma once

#include <compare>
#include <string>
#include <vector>

#include "scdeck/bigint.hpp"
#include "scdeck/graph.hpp"

namespace scdeck {

/// Characteristic polynomial det(lambda*I - A) of the adjacency matrix,
/// exact integer coefficients stored ascending: coeffs[k] multiplies
/// lambda^k, coeffs[n] == 1. For any simple graph coeffs[n-1] == 0 and
/// coeffs[n-2] == -|E|.
struct CharPoly {
  std::vector<BigInt> coeffs;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
  friend std::strong_ordering operator<=>(const CharPoly& a, const CharPoly& b);
};

/// Faddeev-LeVerrier over exact integers; every internal division is checked
/// to be remainder-free (a failure would mean an implementation bug, hence
/// logic_error rather than a recoverable condition).
CharPoly char_poly(const Graph& g);

/// Renders like "x^4-3x^2+1" (zero coefficients skipped, unit coefficients
/// implicit).
std::string to_string(const CharPoly& p);

}  // namespace scdeck
