#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "scdeck/bigint.hpp"

namespace scdeck {

/// Exponent vector k_1..k_N with sum over s of s*k_s == N. Realizes the
/// counting formula's partition constraint: k_s counts the 4s-cycles of a
/// complementing permutation.
struct PartitionVector {
  std::vector<int> k;  // k[s-1] is k_s

  friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
};

/// Visits every partition vector of N exactly once, largest part first.
void for_each_partition(int N, const std::function<void(const PartitionVector&)>& fn);

std::vector<PartitionVector> partitions(int N);

/// Exponent of 2 for the 4N-vertex term:
/// R = 2*sum k_s(s k_s - 1) + 4*sum_{a<b} k_a k_b gcd(a,b).
std::int64_t exponent_R(const PartitionVector& k);

/// Exponent for the 4N+1-vertex term:
/// R' = sum k_s(2s k_s - 1) + 4*sum_{a<b} k_a k_b gcd(a,b), i.e. R + sum k_s.
std::int64_t exponent_Rprime(const PartitionVector& k);

struct SCCount {
  int n = 0;
  BigInt value;
};

/// Exact number of self-complementary graphs on n vertices:
///   sum over partition vectors of 2^R / prod(s^{k_s} k_s!)
/// with R' in place of R when n == 4N+1. Terms accumulate as exact
/// rationals; the final sum is asserted to be an integer. Zero for
/// n == 2, 3 (mod 4) with n > 1.
SCCount sc_count(int n);

struct CountRow {
  int n = 0;
  BigInt value;
  int digits = 0;
};

/// Rows for every n <= max_n with n == 1 or n == 0, 1 (mod 4), ascending.
std::vector<CountRow> counts_table(int max_n);

}  // namespace scdeck
