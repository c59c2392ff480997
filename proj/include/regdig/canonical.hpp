#pragma once

#include "regdig/digraph.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regdig {

/// A bijection on 0..n-1; mapping[v] is the image of node v.
using Permutation = std::vector<int>;

inline bool is_valid_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// Relabels nodes: result.at(p[r], p[c]) = g.at(r, c).
inline Digraph apply_permutation(const Digraph& g, const Permutation& p) {
  if (!is_valid_permutation(p, g.n))
    throw std::invalid_argument("apply_permutation: size mismatch or not a bijection");
  Digraph out(g.n);
  for (int r = 0; r < g.n; ++r)
    for (int c = 0; c < g.n; ++c) out.at(p[r], p[c]) = g.at(r, c);
  return out;
}

/// The full automorphism group as an explicit element set. Groups here are
/// tiny (order divides n! and n stays single-digit), so no generator
/// representation is kept.
struct AutomorphismGroup {
  std::vector<Permutation> elements;
  std::uint64_t order = 0;
};

namespace detail {

inline constexpr int kMaxNodes = 16;

/// Shared search core for minimality questions on a partially filled matrix.
///
/// The object of study is an m x n block B (the first m rows of an adjacency
/// matrix under construction, all n columns present) together with the group
/// S_m acting simultaneously on the m rows and on the first m columns;
/// columns m..n-1 are pinned. sigma.B denotes the relabeled block, and blocks
/// compare by the row-major flattening of their m*n cells.
///
/// The search builds tau = sigma^{-1} slot by slot: tau[i] is the old row
/// placed at new position i. With slots 0..a-1 assigned, a cell (r, j) of
/// sigma.B is
///   - B[tau[r]][j]        for r < a, j >= m          (known)
///   - B[tau[r]][tau[j]]   for r < a, j < a           (known)
///   - bounded by the value spread over the unassigned rows/columns otherwise.
/// Cells are compared against the reference in row-major order; the scan
/// stops at the first cell whose relation to the reference is not forced,
/// and the search deepens there. A cell whose every completion ties lets the
/// scan pass; once a scan position is passed it stays forced-equal for all
/// descendants, so children resume scanning where the parent stopped.
class BlockSearch {
 public:
  BlockSearch(const std::uint8_t* block, int m, int n) : b_(block), m_(m), n_(n) {}

  /// True iff some sigma in S_m makes the block strictly smaller, i.e. the
  /// block is not the minimum of its own orbit.
  bool beaten() {
    if (m_ <= 1) return false;
    return beaten_rec(0, full_mask(), 0);
  }

 private:
  enum class Scan { beaten, dead, uncertain, all_equal };

  std::uint32_t full_mask() const { return (1u << m_) - 1; }
  std::uint8_t at(int r, int c) const { return b_[r * n_ + c]; }

  // Value spread of cell (r, j) of sigma.B given the current assignment.
  // Returns {lo, hi}; lo == hi means the cell is determined.
  std::pair<int, int> cell_range(int r, int j, int a, std::uint32_t unused) const {
    if (r < a) {
      int u = tau_[r];
      if (j >= m_) return {at(u, j), at(u, j)};
      if (j < a) return {at(u, tau_[j]), at(u, tau_[j])};
      int lo = 255, hi = 0;
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int x = std::countr_zero(s);
        int v = at(u, x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return {lo, hi};
    }
    int lo = 255, hi = 0;
    if (j >= m_ || j < a) {
      int col = j >= m_ ? j : tau_[j];
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int u = std::countr_zero(s);
        int v = at(u, col);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    } else if (r == j) {
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int u = std::countr_zero(s);
        int v = at(u, u);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    } else {
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int u = std::countr_zero(s);
        for (std::uint32_t t = unused; t; t &= t - 1) {
          int x = std::countr_zero(t);
          if (x == u) continue;
          int v = at(u, x);
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      }
    }
    return {lo, hi};
  }

  // Scans cells start..m*n-1 in row-major order against the block itself.
  // On Scan::uncertain, *stop is the cell where the scan halted.
  Scan scan(int a, std::uint32_t unused, int start, int* stop) const {
    for (int q = start; q < m_ * n_; ++q) {
      int r = q / n_, j = q % n_;
      int w = at(r, j);
      auto [lo, hi] = cell_range(r, j, a, unused);
      if (lo == w && hi == w) continue;
      if (lo < w) return Scan::beaten;  // some completion wins here, prefix is tied
      if (lo > w) return Scan::dead;
      *stop = q;  // lo == w < hi: only a deeper assignment can settle this cell
      return Scan::uncertain;
    }
    return Scan::all_equal;
  }

  bool beaten_rec(int a, std::uint32_t unused, int start) {
    int stop = 0;
    switch (scan(a, unused, start, &stop)) {
      case Scan::beaten:
        return true;
      case Scan::dead:
      case Scan::all_equal:
        return false;
      case Scan::uncertain:
        break;
    }
    for (std::uint32_t s = unused; s; s &= s - 1) {
      int u = std::countr_zero(s);
      tau_[a] = u;
      if (beaten_rec(a + 1, unused & ~(1u << u), stop)) return true;
    }
    return false;
  }

  const std::uint8_t* b_;
  int m_, n_;
  std::array<int, kMaxNodes> tau_{};
};

/// True iff the m x n block is the row-major minimum of its orbit under
/// simultaneous relabeling of indices 0..m-1. Every row prefix of an orbit-
/// minimal full matrix has this property, which is what makes it usable as
/// the orderly-generation prune.
inline bool block_is_minimal(const std::uint8_t* block, int m, int n) {
  return !BlockSearch(block, m, n).beaten();
}

/// Calls sink(tau) for every permutation with g.at(tau[r], tau[c]) ==
/// g.at(r, c) for all r, c, i.e. for every automorphism. Backtracking with
/// incremental row/column equality checks.
template <typename Sink>
void for_each_automorphism(const Digraph& g, Sink&& sink) {
  const int n = g.n;
  if (n == 0) {
    std::array<int, kMaxNodes> tau{};
    sink(tau.data(), 0);
    return;
  }
  if (n > kMaxNodes) throw std::invalid_argument("for_each_automorphism: n too large");
  std::array<int, kMaxNodes> tau{};
  auto rec = [&](auto&& self, int a, std::uint32_t unused) -> void {
    if (a == n) {
      sink(tau.data(), n);
      return;
    }
    for (std::uint32_t s = unused; s; s &= s - 1) {
      int u = std::countr_zero(s);
      if (g.at(u, u) != g.at(a, a)) continue;
      bool ok = true;
      for (int j = 0; j < a && ok; ++j)
        ok = g.at(u, tau[j]) == g.at(a, j) && g.at(tau[j], u) == g.at(j, a);
      if (!ok) continue;
      tau[a] = u;
      self(self, a + 1, unused & ~(1u << u));
    }
  };
  rec(rec, 0, n >= 32 ? ~0u : (1u << n) - 1);
}

}  // namespace detail

/// Canonical representative of the isomorphism class of g: the
/// lexicographically minimal row-major flattening over all simultaneous
/// row/column permutations. Branch-and-bound over label assignments, pruning
/// branches that provably cannot improve on the best matrix found so far.
inline Digraph canonical_form(const Digraph& g) {
  const int n = g.n;
  if (n > detail::kMaxNodes) throw std::invalid_argument("canonical_form: n too large");
  if (n <= 1) return g;

  std::vector<std::uint8_t> best = g.cells;
  std::array<int, detail::kMaxNodes> tau{};
  const auto* cells = g.cells.data();
  auto at = [&](int r, int c) { return cells[r * n + c]; };

  // Value spread of cell (r, j) of the relabeled matrix, as in BlockSearch
  // but with m == n (no pinned columns).
  auto cell_range = [&](int r, int j, int a, std::uint32_t unused) -> std::pair<int, int> {
    int lo = 255, hi = 0;
    if (r < a && j < a) {
      int v = at(tau[r], tau[j]);
      return {v, v};
    }
    if (r < a) {
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int v = at(tau[r], std::countr_zero(s));
        lo = std::min(lo, v), hi = std::max(hi, v);
      }
    } else if (j < a) {
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int v = at(std::countr_zero(s), tau[j]);
        lo = std::min(lo, v), hi = std::max(hi, v);
      }
    } else if (r == j) {
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int u = std::countr_zero(s);
        int v = at(u, u);
        lo = std::min(lo, v), hi = std::max(hi, v);
      }
    } else {
      for (std::uint32_t s = unused; s; s &= s - 1) {
        int u = std::countr_zero(s);
        for (std::uint32_t t = unused; t; t &= t - 1) {
          int x = std::countr_zero(t);
          if (x == u) continue;
          int v = at(u, x);
          lo = std::min(lo, v), hi = std::max(hi, v);
        }
      }
    }
    return {lo, hi};
  };

  auto rec = [&](auto&& self, int a, std::uint32_t unused) -> void {
    if (a == n) {
      std::vector<std::uint8_t> flat(best.size());
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) flat[r * n + c] = at(tau[r], tau[c]);
      if (flat < best) best = std::move(flat);
      return;
    }
    // Prune against the current best: stop as soon as the assigned prefix is
    // provably >= best (first non-tied cell forced above it, or everything
    // forced equal).
    bool can_improve = false;
    for (int q = 0; q < n * n; ++q) {
      int w = best[q];
      auto [lo, hi] = cell_range(q / n, q % n, a, unused);
      if (lo == w && hi == w) continue;
      if (lo > w) return;
      can_improve = true;  // first undecided cell still admits <= best: descend
      break;
    }
    if (!can_improve) return;
    for (std::uint32_t s = unused; s; s &= s - 1) {
      int u = std::countr_zero(s);
      tau[a] = u;
      self(self, a + 1, unused & ~(1u << u));
    }
  };
  rec(rec, 0, (1u << n) - 1);
  return Digraph(n, std::move(best));
}

/// All label permutations fixing the adjacency matrix of g, as explicit
/// elements; order >= 1 (the identity always fixes).
inline AutomorphismGroup automorphism_group(const Digraph& g) {
  AutomorphismGroup group;
  detail::for_each_automorphism(g, [&](const int* tau, int n) {
    group.elements.emplace_back(tau, tau + n);
  });
  group.order = group.elements.size();
  return group;
}

}  // namespace regdig
