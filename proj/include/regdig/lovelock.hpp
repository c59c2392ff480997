#pragma once

#include "regdig/digraph.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regdig {

/// Split form of a 2-regular digraph: n bottom nodes (tensor factors as arc
/// tails) and n top nodes (factors as arc heads), every node of degree
/// exactly 2. Edges are kept as a sorted list, multiplicities by repetition.
struct BipartiteGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (bottom, top)

  bool operator==(const BipartiteGraph&) const = default;
};

/// One Riemann factor: two contravariant (upper) and two covariant (lower)
/// index slots. Slot order is in-arc order for uppers, out-arc order for
/// lowers; no finer index distinction is represented.
struct TensorFactor {
  std::array<char, 2> upper{};
  std::array<char, 2> lower{};

  bool operator==(const TensorFactor&) const = default;
};

/// Fully contracted product of n Riemann factors: 2n index letters, each
/// appearing exactly once upper and once lower.
struct TensorTerm {
  std::vector<TensorFactor> factors;

  bool operator==(const TensorTerm&) const = default;
};

namespace detail {

inline void require_2_regular(const Digraph& g, const char* who) {
  if (!is_k_regular(g, 2)) throw std::invalid_argument(std::string(who) + ": graph is not 2-regular");
}

}  // namespace detail

/// Splits every node into a bottom copy (keeping its out-arcs) and a top
/// copy (keeping its in-arcs): arc (i,j) of multiplicity m becomes m edges
/// (bottom i, top j). Both sides end up 2-regular.
inline BipartiteGraph to_bipartite(const Digraph& g) {
  detail::require_2_regular(g, "to_bipartite");
  BipartiteGraph b;
  b.n = g.n;
  b.edges = to_arc_list(g);
  return b;
}

/// Coalesces bottom i with top i, keeping all edges fastened: inverse of
/// to_bipartite. Degree-2 on both sides is required and is exactly what
/// makes the result 2-regular.
inline Digraph from_bipartite(const BipartiteGraph& b) {
  Digraph g(b.n);
  for (auto [bottom, top] : b.edges) {
    if (bottom < 0 || bottom >= b.n || top < 0 || top >= b.n)
      throw std::invalid_argument("from_bipartite: node index out of range");
    ++g.at(bottom, top);
  }
  if (!is_k_regular(g, 2))
    throw std::invalid_argument("from_bipartite: a node violates the degree-2 requirement");
  return g;
}

/// Renders the Lovelock term of a 2-regular digraph: one fresh index letter
/// per arc in sorted arc-list order; the letter takes the next free lower
/// slot of the tail factor and the next free upper slot of the head factor.
/// Loops become self-contractions within one factor.
inline TensorTerm render_term(const Digraph& g) {
  detail::require_2_regular(g, "render_term");
  if (2 * g.n > 26) throw std::invalid_argument("render_term: index alphabet exhausted");
  ArcList arcs = to_arc_list(g);
  TensorTerm term;
  term.factors.resize(g.n);
  std::vector<int> next_upper(g.n, 0), next_lower(g.n, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    char letter = static_cast<char>('a' + i);
    auto [tail, head] = arcs[i];
    term.factors[tail].lower[next_lower[tail]++] = letter;
    term.factors[head].upper[next_upper[head]++] = letter;
  }
  return term;
}

}  // namespace regdig
