// Brute-force reference implementations the tests compare the real library
// against. Everything here is deliberately naive: full permutation sweeps
// and exhaustive matrix fills, usable up to n = 4 or so.
#pragma once

#include "regdig/canonical.hpp"
#include "regdig/digraph.hpp"
#include "regdig/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracles {

inline regdig::Digraph make_graph(const std::vector<std::vector<int>>& rows) {
  regdig::Digraph g(static_cast<int>(rows.size()));
  for (int r = 0; r < g.n; ++r)
    for (int c = 0; c < g.n; ++c) g.at(r, c) = static_cast<std::uint8_t>(rows[r][c]);
  return g;
}

inline regdig::Permutation identity_permutation(int n) {
  regdig::Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// Minimum row-major flattening over all n! simultaneous permutations.
inline regdig::Digraph brute_canonical(const regdig::Digraph& g) {
  regdig::Permutation p = identity_permutation(g.n);
  regdig::Digraph best = g;
  do {
    regdig::Digraph h = regdig::apply_permutation(g, p);
    if (h.cells < best.cells) best = h;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// All permutations fixing the adjacency matrix, by trying every one.
inline std::vector<regdig::Permutation> brute_automorphisms(const regdig::Digraph& g) {
  std::vector<regdig::Permutation> elements;
  regdig::Permutation p = identity_permutation(g.n);
  do {
    if (regdig::apply_permutation(g, p) == g) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return elements;
}

/// Every labeled n x n matrix with all row and column sums k that passes the
/// multiarc/loop filter, by exhaustive row-by-row fill.
inline std::vector<regdig::Digraph> all_labeled(int n, int k,
                                                const regdig::EnumerationFilter& filter = {}) {
  std::vector<regdig::Digraph> out;
  regdig::Digraph g(n);
  std::vector<int> colsum(n, 0);
  auto rec = [&](auto&& self, int row, int col, int remaining) -> void {
    if (col == n) {
      if (remaining != 0) return;
      if (row + 1 == n) {
        out.push_back(g);
        return;
      }
      self(self, row + 1, 0, k);
      return;
    }
    int cap = std::min(k - colsum[col], remaining);
    if (filter.forbid_loops && row == col) cap = 0;
    if (filter.forbid_multiarcs) cap = std::min(cap, 1);
    for (int v = 0; v <= cap; ++v) {
      g.at(row, col) = static_cast<std::uint8_t>(v);
      colsum[col] += v;
      self(self, row, col + 1, remaining - v);
      colsum[col] -= v;
    }
    g.at(row, col) = 0;
  };
  if (n == 0) {
    out.push_back(g);
    return out;
  }
  rec(rec, 0, 0, k);
  return out;
}

/// Isomorphism classes of the above as a set of canonical cell vectors.
inline std::set<std::vector<std::uint8_t>> brute_class_set(
    int n, int k, const regdig::EnumerationFilter& filter = {}) {
  std::set<std::vector<std::uint8_t>> classes;
  for (const auto& g : all_labeled(n, k, filter)) classes.insert(brute_canonical(g).cells);
  return classes;
}

}  // namespace oracles
