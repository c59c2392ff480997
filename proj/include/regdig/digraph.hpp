#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regdig {

/// A directed multigraph on nodes 0..n-1, stored as a dense matrix of arc
/// multiplicities. cell(r, c) is the number of arcs from r to c; loops sit on
/// the diagonal and contribute one to both the indegree and the outdegree of
/// their node. n = 0 (the empty graph) is valid.
struct Digraph {
  int n = 0;
  std::vector<std::uint8_t> cells;  // row-major, size n*n

  Digraph() = default;
  explicit Digraph(int nodes) : n(nodes) {
    if (nodes < 0) throw std::invalid_argument("Digraph: negative node count");
    cells.assign(static_cast<std::size_t>(nodes) * nodes, 0);
  }
  Digraph(int nodes, std::vector<std::uint8_t> flat) : n(nodes), cells(std::move(flat)) {
    if (nodes < 0 || cells.size() != static_cast<std::size_t>(nodes) * nodes)
      throw std::invalid_argument("Digraph: cell count does not match node count");
  }

  std::uint8_t at(int r, int c) const { return cells[static_cast<std::size_t>(r) * n + c]; }
  std::uint8_t& at(int r, int c) { return cells[static_cast<std::size_t>(r) * n + c]; }

  int row_sum(int r) const {
    int s = 0;
    for (int c = 0; c < n; ++c) s += at(r, c);
    return s;
  }
  int col_sum(int c) const {
    int s = 0;
    for (int r = 0; r < n; ++r) s += at(r, c);
    return s;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;
  /// Orders graphs of equal n by the row-major flattening of the matrix.
  friend auto operator<=>(const Digraph& a, const Digraph& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.cells <=> b.cells;
  }
};

/// One arc as (tail, head).
using Arc = std::pair<int, int>;

/// Arc list of a labeled digraph: sorted ascending by (tail, head), multiarcs
/// repeated. Length is k*n for a k-regular digraph.
using ArcList = std::vector<Arc>;

inline Digraph from_arc_list(const ArcList& arcs, int n) {
  Digraph g(n);
  for (const auto& [tail, head] : arcs) {
    if (tail < 0 || tail >= n || head < 0 || head >= n)
      throw std::out_of_range("from_arc_list: node index out of range");
    ++g.at(tail, head);
  }
  return g;
}

inline ArcList to_arc_list(const Digraph& g) {
  ArcList arcs;
  for (int r = 0; r < g.n; ++r)
    for (int c = 0; c < g.n; ++c)
      for (int i = 0; i < g.at(r, c); ++i) arcs.emplace_back(r, c);
  return arcs;  // row-major emission is already (tail, head) sorted
}

inline bool is_k_regular(const Digraph& g, int k) {
  for (int i = 0; i < g.n; ++i)
    if (g.row_sum(i) != k || g.col_sum(i) != k) return false;
  return true;
}

/// Number of loops = trace of the matrix (a double loop counts as 2).
inline int loop_count(const Digraph& g) {
  int t = 0;
  for (int i = 0; i < g.n; ++i) t += g.at(i, i);
  return t;
}

/// Number of matrix cells holding 2 or more arcs. A double loop is one
/// multiarc cell; this counts cells, not excess arcs.
inline int multiarc_count(const Digraph& g) {
  int m = 0;
  for (std::uint8_t v : g.cells)
    if (v >= 2) ++m;
  return m;
}

/// Partition of the nodes into weak components: components of the underlying
/// simple graph (arc directions forgotten, multiarcs collapsed, loops
/// removed).
struct ComponentPartition {
  int count = 0;
  std::vector<int> assignment;  // node -> component id, ids 0..count-1
};

inline ComponentPartition weak_components(const Digraph& g) {
  ComponentPartition p;
  p.assignment.assign(g.n, -1);
  std::vector<int> stack;
  for (int start = 0; start < g.n; ++start) {
    if (p.assignment[start] >= 0) continue;
    int id = p.count++;
    p.assignment[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < g.n; ++w) {
        if (w == v || p.assignment[w] >= 0) continue;
        if (g.at(v, w) + g.at(w, v) > 0) {
          p.assignment[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return p;
}

}  // namespace regdig
