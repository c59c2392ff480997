#pragma once

#include "regdig/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regdig {

enum class TableKind { unlabeled, labeled };

/// Sparse count table indexed by (n, c): graphs on n nodes with c weak
/// components. Absent entries read as zero; builders store only nonzero
/// counts.
struct CountTable {
  std::map<std::pair<int, int>, BigInt> entries;
  TableKind kind = TableKind::unlabeled;

  BigInt at(int n, int c) const {
    auto it = entries.find({n, c});
    return it == entries.end() ? BigInt(0) : it->second;
  }
  void set(int n, int c, BigInt v) {
    if (v != 0) entries[{n, c}] = std::move(v);
  }
  BigInt row_total(int n) const {
    BigInt total = 0;
    for (auto it = entries.lower_bound({n, 0}); it != entries.end() && it->first.first == n; ++it)
      total += it->second;
    return total;
  }
  int max_n() const { return entries.empty() ? -1 : entries.rbegin()->first.first; }

  bool operator==(const CountTable&) const = default;
};

namespace detail {

// Partitions of n into exactly c parts, parts nonincreasing, each <= max_part.
// fn receives the parts vector.
template <typename Fn>
void for_each_partition(int n, int c, int max_part, std::vector<int>& parts, Fn&& fn) {
  if (c == 0) {
    if (n == 0) fn(parts);
    return;
  }
  int hi = std::min(max_part, n - (c - 1));
  for (int p = hi; p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(n - p, c - 1, p, parts, fn);
    parts.pop_back();
  }
}

// Compositions of n into exactly c positive parts, lexicographic order.
template <typename Fn>
void for_each_composition(int n, int c, std::vector<int>& parts, Fn&& fn) {
  if (c == 0) {
    if (n == 0) fn(parts);
    return;
  }
  for (int p = 1; p <= n - (c - 1); ++p) {
    parts.push_back(p);
    for_each_composition(n - p, c - 1, parts, fn);
    parts.pop_back();
  }
}

inline void require_prefix(const std::vector<BigInt>& connected, int needed, const char* who) {
  if (static_cast<int>(connected.size()) < needed)
    throw std::invalid_argument(std::string(who) + ": insufficient connected prefix");
}

}  // namespace detail

/// Number of unlabeled c-component structures on n nodes assembled from
/// connected ones: sum over partitions of n into exactly c parts of the
/// product, over distinct part sizes i with multiplicity m, of the multiset
/// coefficient C(connected[i-1] + m - 1, m).
inline BigInt multiset_transform(const std::vector<BigInt>& connected, int n, int c) {
  if (n < 0 || c < 0 || c > n) return 0;
  if (c == 0) return n == 0 ? BigInt(1) : BigInt(0);
  detail::require_prefix(connected, n - c + 1, "multiset_transform");
  BigInt total = 0;
  std::vector<int> parts;
  detail::for_each_partition(n, c, n, parts, [&](const std::vector<int>& ps) {
    BigInt prod = 1;
    for (std::size_t i = 0; i < ps.size();) {
      std::size_t j = i;
      while (j < ps.size() && ps[j] == ps[i]) ++j;
      int mult = static_cast<int>(j - i);
      prod *= binomial(connected[ps[i] - 1] + mult - 1, mult);
      i = j;
    }
    total += prod;
  });
  return total;
}

/// Labeled analogue: (1/c!) times the sum over compositions n = n_1+..+n_c of
/// multinomial(n; n_1..n_c) times the product of connected[n_i - 1]. The c!
/// always divides exactly; a remainder means the input was not a genuine
/// connected-count sequence.
inline BigInt bell_transform(const std::vector<BigInt>& connected, int n, int c) {
  if (n < 0 || c < 0 || c > n) return 0;
  if (c == 0) return n == 0 ? BigInt(1) : BigInt(0);
  detail::require_prefix(connected, n - c + 1, "bell_transform");
  BigInt total = 0;
  std::vector<int> parts;
  detail::for_each_composition(n, c, parts, [&](const std::vector<int>& ps) {
    BigInt prod = multinomial(n, ps);
    for (int p : ps) prod *= connected[p - 1];
    total += prod;
  });
  BigInt den = factorial(c);
  if (total % den != 0) throw std::invalid_argument("bell_transform: c! does not divide the sum");
  return total / den;
}

/// Recomputes every labeled entry L(n,c) for n <= upto by exponentiating the
/// bivariate generating function exp(t C(x)), C(x) = sum connected[j-1]
/// x^j/j!, via the series recurrence n e_n = sum_j j c_j t e_{n-j}. Entirely
/// independent of bell_transform; the two are cross-checked entry by entry
/// before returning and a mismatch throws.
inline CountTable verify_egf(const std::vector<BigInt>& connected, int upto) {
  detail::require_prefix(connected, upto, "verify_egf");
  // series[n][c] = coefficient of x^n t^c in exp(t C(x))
  std::vector<std::vector<BigRat>> series(upto + 1);
  series[0] = {BigRat(1)};
  for (int n = 1; n <= upto; ++n) {
    series[n].assign(n + 1, BigRat(0));
    for (int j = 1; j <= n; ++j) {
      BigRat cj(connected[j - 1], factorial(j));
      for (int c = 1; c <= n - j + 1; ++c)
        series[n][c] += BigRat(j, n) * cj * series[n - j][c - 1];
    }
  }
  CountTable table;
  table.kind = TableKind::labeled;
  for (int n = 1; n <= upto; ++n) {
    for (int c = 1; c <= n; ++c) {
      BigRat v = series[n][c] * factorial(n);
      if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("verify_egf: non-integer count");
      BigInt entry = boost::multiprecision::numerator(v);
      if (entry != bell_transform(connected, n, c))
        throw std::logic_error("verify_egf: disagreement with bell_transform at (" +
                               std::to_string(n) + "," + std::to_string(c) + ")");
      table.set(n, c, entry);
    }
  }
  return table;
}

/// Tabulates component counts from complete per-n enumerations (slot i of
/// records_by_n holds all records for n = i) and cross-validates every entry
/// against the multiset transform of the connected column before returning.
template <typename GraphRecordT>
CountTable assemble_unlabeled_table(const std::vector<std::vector<GraphRecordT>>& records_by_n) {
  CountTable table;
  table.kind = TableKind::unlabeled;
  for (int n = 0; n < static_cast<int>(records_by_n.size()); ++n) {
    std::map<int, BigInt> row;
    for (const auto& rec : records_by_n[n]) row[rec.components] += 1;
    for (const auto& [c, count] : row) table.set(n, c, count);
  }
  std::vector<BigInt> connected;
  for (int n = 1; n < static_cast<int>(records_by_n.size()); ++n) {
    connected.push_back(table.at(n, 1));
    for (int c = 1; c <= n; ++c) {
      if (table.at(n, c) != multiset_transform(connected, n, c))
        throw std::logic_error("assemble_unlabeled_table: cross-validation mismatch at (" +
                               std::to_string(n) + "," + std::to_string(c) + ")");
    }
  }
  return table;
}

// ---- Independent sequence oracles -----------------------------------------
// Recurrence-based stand-ins for the classical sequences the 1-regular case
// must reproduce. Kept local so every cited value is recomputed, not quoted.

/// p(0)..p(upto) by Euler's pentagonal-number recurrence.
inline std::vector<BigInt> partition_numbers(int upto) {
  std::vector<BigInt> p(upto + 1);
  p[0] = 1;
  for (int n = 1; n <= upto; ++n) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      BigInt term = 0;
      if (g1 <= n) term += p[n - g1];
      if (g2 <= n) term += p[n - g2];
      acc += (k % 2 == 1) ? term : -term;
    }
    p[n] = acc;
  }
  return p;
}

inline BigInt partition_count(int n) { return partition_numbers(n)[n]; }

/// Partitions of n into exactly c parts: p(n,c) = p(n-1,c-1) + p(n-c,c).
inline BigInt partitions_with_parts(int n, int c) {
  if (n < 0 || c < 0 || c > n) return 0;
  if (n == 0) return 1;  // c == 0 here
  if (c == 0) return 0;
  std::vector<std::vector<BigInt>> p(n + 1, std::vector<BigInt>(c + 1));
  p[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, c); ++j) p[i][j] = p[i - 1][j - 1] + p[i - j][j];
  return p[n][c];
}

/// Stirling numbers of the second kind by the triangle recurrence.
inline BigInt stirling2(int n, int c) {
  if (n < 0 || c < 0 || c > n) return 0;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = BigInt(j) * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][c];
}

/// Bell numbers as Stirling row sums.
inline BigInt bell_number(int n) {
  BigInt total = 0;
  for (int c = 0; c <= n; ++c) total += stirling2(n, c);
  return total;
}

}  // namespace regdig
