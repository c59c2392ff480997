#pragma once

#include "regdig/canonical.hpp"
#include "regdig/numeric.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace regdig {

/// Unreduced cycle index of an automorphism group: terms maps the exponent
/// vector (e_1..e_n) of a cycle-type monomial t_1^{e_1}..t_n^{e_n} to the
/// number of group elements with that cycle type; denominator is the group
/// order. Kept unreduced because the group order itself is needed downstream
/// (labeled counts, file format). Monomials iterate in descending
/// lexicographic order, which is also the display order.
struct CycleIndex {
  std::map<std::vector<int>, BigInt, std::greater<std::vector<int>>> terms;
  std::uint64_t denominator = 0;

  bool operator==(const CycleIndex&) const = default;
};

/// Counts of graphs with r = 0..n distinguished nodes; coefficients[r] pairs
/// with x^r after the t_i -> 1+x^i substitution.
struct RootedPolynomial {
  std::vector<BigInt> coefficients;

  bool operator==(const RootedPolynomial&) const = default;
};

/// Exponent vector (e_1..e_n) of the cycle-type monomial of a permutation
/// given as an image array of length n.
inline std::vector<int> cycle_type(const int* perm, int n) {
  std::vector<int> expo(n, 0);
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (int u = v; !seen[u]; u = perm[u]) {
      seen[u] = true;
      ++len;
    }
    ++expo[len - 1];
  }
  return expo;
}

inline std::vector<int> cycle_type(const Permutation& perm) {
  return cycle_type(perm.data(), static_cast<int>(perm.size()));
}

inline CycleIndex cycle_index_of(const AutomorphismGroup& group) {
  if (group.elements.empty())
    throw std::invalid_argument("cycle_index_of: group must contain the identity");
  CycleIndex z;
  for (const Permutation& p : group.elements) z.terms[cycle_type(p)] += 1;
  z.denominator = group.elements.size();
  return z;
}

/// Cycle index straight from a graph, accumulating cycle types as the
/// automorphism search finds them; never materializes the element list.
inline CycleIndex cycle_index_of(const Digraph& g) {
  CycleIndex z;
  std::uint64_t order = 0;
  detail::for_each_automorphism(g, [&](const int* tau, int n) {
    z.terms[cycle_type(tau, n)] += 1;
    ++order;
  });
  z.denominator = order;
  return z;
}

/// Number of labeled graphs in the isomorphism class: n! divided by the
/// group order. Non-divisibility means z was not built from a genuine group.
inline BigInt labeled_count(const CycleIndex& z, int n) {
  if (z.denominator == 0) throw std::invalid_argument("labeled_count: empty cycle index");
  BigInt num = factorial(n);
  BigInt den = z.denominator;
  if (num % den != 0) throw std::invalid_argument("labeled_count: group order does not divide n!");
  return num / den;
}

namespace detail {

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (1 + x^i)^e expanded: coefficient of x^{i j} is C(e, j).
inline std::vector<BigInt> one_plus_power(int i, int e) {
  std::vector<BigInt> out(static_cast<std::size_t>(i) * e + 1);
  for (int j = 0; j <= e; ++j) out[static_cast<std::size_t>(i) * j] = binomial(e, j);
  return out;
}

}  // namespace detail

/// Substitutes t_i -> 1 + x^i and divides by the group order. Every
/// coefficient of the numerator is divisible by the order (each counts fixed
/// node subsets summed over the group), so the result is integral; a
/// remainder means z is corrupted.
inline RootedPolynomial rooted_polynomial(const CycleIndex& z) {
  if (z.denominator == 0 || z.terms.empty())
    throw std::invalid_argument("rooted_polynomial: empty cycle index");
  const int n = static_cast<int>(z.terms.begin()->first.size());
  std::vector<BigInt> num(n + 1);
  for (const auto& [expo, coeff] : z.terms) {
    if (static_cast<int>(expo.size()) != n)
      throw std::invalid_argument("rooted_polynomial: mixed monomial sizes");
    int degree = 0;
    for (int i = 1; i <= n; ++i) degree += i * expo[i - 1];
    if (degree != n)
      throw std::invalid_argument("rooted_polynomial: monomial does not partition n");
    std::vector<BigInt> prod{1};
    for (int i = 1; i <= n; ++i)
      if (expo[i - 1] > 0) prod = detail::poly_mul(prod, detail::one_plus_power(i, expo[i - 1]));
    for (int r = 0; r <= n; ++r) num[r] += coeff * prod[r];
  }
  BigInt den = z.denominator;
  RootedPolynomial out;
  out.coefficients.resize(n + 1);
  for (int r = 0; r <= n; ++r) {
    if (num[r] % den != 0)
      throw std::invalid_argument("rooted_polynomial: non-integer coefficient");
    out.coefficients[r] = num[r] / den;
  }
  return out;
}

/// Row per input slot: the coefficient-wise sum of the rooted polynomials of
/// that slot's records. Works over any record type carrying a cycle_index.
template <typename GraphRecordT>
std::vector<RootedPolynomial> rooted_table(
    const std::vector<std::vector<GraphRecordT>>& records_by_n) {
  std::vector<RootedPolynomial> rows;
  rows.reserve(records_by_n.size());
  for (const auto& records : records_by_n) {
    RootedPolynomial row;
    for (const auto& rec : records) {
      RootedPolynomial p = rooted_polynomial(rec.cycle_index);
      if (row.coefficients.empty()) {
        row = std::move(p);
      } else {
        if (p.coefficients.size() != row.coefficients.size())
          throw std::invalid_argument("rooted_table: records of mixed n in one row");
        for (std::size_t r = 0; r < p.coefficients.size(); ++r)
          row.coefficients[r] += p.coefficients[r];
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace regdig
