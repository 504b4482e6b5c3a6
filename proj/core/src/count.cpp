#include "scdeck/count.hpp"

#include <numeric>
#include <stdexcept>

namespace scdeck {

namespace {

void descend(int s, int remaining, PartitionVector& acc,
             const std::function<void(const PartitionVector&)>& fn) {
  if (s == 0) {
    if (remaining == 0) fn(acc);
    return;
  }
  for (int ks = remaining / s; ks >= 0; --ks) {
    acc.k[s - 1] = ks;
    descend(s - 1, remaining - s * ks, acc, fn);
  }
  acc.k[s - 1] = 0;
}

std::int64_t gcd_cross_term(const PartitionVector& kv) {
  const int N = static_cast<int>(kv.k.size());
  std::int64_t sum = 0;
  for (int a = 1; a <= N; ++a) {
    if (kv.k[a - 1] == 0) continue;
    for (int b = a + 1; b <= N; ++b) {
      if (kv.k[b - 1] == 0) continue;
      sum += static_cast<std::int64_t>(kv.k[a - 1]) * kv.k[b - 1] * std::gcd(a, b);
    }
  }
  return sum;
}

BigInt term_denominator(const PartitionVector& kv) {
  BigInt denom = 1;
  for (int s = 1; s <= static_cast<int>(kv.k.size()); ++s) {
    const int ks = kv.k[s - 1];
    for (int i = 0; i < ks; ++i) denom *= s;
    for (int i = 2; i <= ks; ++i) denom *= i;
  }
  return denom;
}

}  // namespace

void for_each_partition(int N, const std::function<void(const PartitionVector&)>& fn) {
  if (N < 1) throw std::invalid_argument("for_each_partition: N must be >= 1");
  PartitionVector acc;
  acc.k.assign(N, 0);
  descend(N, N, acc, fn);
}

std::vector<PartitionVector> partitions(int N) {
  std::vector<PartitionVector> out;
  for_each_partition(N, [&](const PartitionVector& kv) { out.push_back(kv); });
  return out;
}

std::int64_t exponent_R(const PartitionVector& kv) {
  std::int64_t r = 0;
  for (int s = 1; s <= static_cast<int>(kv.k.size()); ++s) {
    const std::int64_t ks = kv.k[s - 1];
    r += 2 * ks * (s * ks - 1);
  }
  return r + 4 * gcd_cross_term(kv);
}

std::int64_t exponent_Rprime(const PartitionVector& kv) {
  std::int64_t r = 0;
  for (int s = 1; s <= static_cast<int>(kv.k.size()); ++s) {
    const std::int64_t ks = kv.k[s - 1];
    r += ks * (2 * s * ks - 1);
  }
  return r + 4 * gcd_cross_term(kv);
}

SCCount sc_count(int n) {
  if (n < 1) throw std::invalid_argument("sc_count: n must be >= 1");
  if (n == 1) return {n, BigInt(1)};
  const int mod = n % 4;
  if (mod == 2 || mod == 3) return {n, BigInt(0)};

  const int N = n / 4;
  const bool odd = mod == 1;
  BigRational total = 0;
  for_each_partition(N, [&](const PartitionVector& kv) {
    const std::int64_t r = odd ? exponent_Rprime(kv) : exponent_R(kv);
    BigInt numer = BigInt(1) << static_cast<unsigned>(r);
    total += BigRational(std::move(numer), term_denominator(kv));
  });
  if (boost::multiprecision::denominator(total) != 1)
    throw std::logic_error("sc_count: sum is not an integer");
  return {n, BigInt(boost::multiprecision::numerator(total))};
}

std::vector<CountRow> counts_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("counts_table: max_n must be >= 1");
  std::vector<CountRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    if (n != 1 && n % 4 != 0 && n % 4 != 1) continue;
    SCCount c = sc_count(n);
    const int digits = static_cast<int>(c.value.str().size());
    rows.push_back({n, std::move(c.value), digits});
  }
  return rows;
}

}  // namespace scdeck
