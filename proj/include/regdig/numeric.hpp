#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace regdig {

/// Exact integer used for all counts and table arithmetic. Labeled counts and
/// the multinomial intermediates in the composition transforms overflow 64
/// bits from n = 9 on, so everything table-facing stays arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, used only by the generating-function cross-check.
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// binomial(n, k) for big n, small k, via the stepwise product; every
/// intermediate division is exact.
inline BigInt binomial(const BigInt& n, int k) {
  if (k < 0) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// multinomial(n; parts) = n! / prod(part_i!); parts must sum to n.
inline BigInt multinomial(int n, const std::vector<int>& parts) {
  int total = 0;
  BigInt denom = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
    denom *= factorial(p);
  }
  if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  return factorial(n) / denom;
}

}  // namespace regdig
