#include "scdeck/charpoly.hpp"

#include <bit>
#include <stdexcept>

namespace scdeck {

std::strong_ordering operator<=>(const CharPoly& a, const CharPoly& b) {
  if (a.coeffs.size() != b.coeffs.size())
    return a.coeffs.size() <=> b.coeffs.size();
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (a.coeffs[i] != b.coeffs[i])
      return a.coeffs[i] < b.coeffs[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CharPoly char_poly(const Graph& g) {
  const int n = g.order();
  CharPoly p;
  p.coeffs.assign(n + 1, BigInt(0));
  p.coeffs[n] = 1;

  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1), then
  // M_k = A * (M_{k-1} + c_{n-k+1} * I), c_{n-k} = -tr(M_k) / k.
  // A is 0/1, so each matrix product is a sum of adjacency-selected rows.
  std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i * n + j] = g.has_edge(i, j) ? 1 : 0;
  p.coeffs[n - 1] = 0;  // adjacency trace

  std::vector<BigInt> next(static_cast<std::size_t>(n) * n);
  for (int k = 2; k <= n; ++k) {
    const BigInt& c = p.coeffs[n - k + 1];
    for (int i = 0; i < n; ++i) m[i * n + i] += c;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt sum = 0;
        for (std::uint64_t nb = g.row(i); nb;) {
          const int v = std::countr_zero(nb);
          nb &= nb - 1;
          sum += m[v * n + j];
        }
        next[i * n + j] = std::move(sum);
      }
    }
    std::swap(m, next);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += m[i * n + i];
    BigInt q, r;
    boost::multiprecision::divide_qr(trace, BigInt(k), q, r);
    if (r != 0)
      throw std::logic_error("char_poly: inexact trace division");
    p.coeffs[n - k] = -q;
  }
  return p;
}

std::string to_string(const CharPoly& p) {
  const int n = static_cast<int>(p.coeffs.size()) - 1;
  std::string out;
  for (int k = n; k >= 0; --k) {
    const BigInt& c = p.coeffs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) {
      out += 'x';
      if (k >= 2) out += '^' + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace scdeck
