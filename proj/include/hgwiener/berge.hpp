#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hypergraph.hpp"

namespace hgwiener {

namespace detail {

// Depth-bounded search for a Berge path of exactly `remaining` more edges
// from `cur` to `goal`, with all vertices and all edges distinct. No
// memoization; intended for small instances only.
inline bool berge_extend(const Hypergraph& h, Vertex cur, Vertex goal,
                         int remaining, std::vector<char>& used_vertex,
                         std::vector<char>& used_edge) {
  for (int ei : h.incident(cur)) {
    if (used_edge[ei]) continue;
    used_edge[ei] = 1;
    for (Vertex w : h.edges()[ei]) {
      if (remaining == 1) {
        if (w == goal) {
          used_edge[ei] = 0;
          return true;
        }
      } else if (w != goal && !used_vertex[w]) {
        used_vertex[w] = 1;
        if (berge_extend(h, w, goal, remaining - 1, used_vertex, used_edge)) {
          used_vertex[w] = 0;
          used_edge[ei] = 0;
          return true;
        }
        used_vertex[w] = 0;
      }
    }
    used_edge[ei] = 0;
  }
  return false;
}

}  // namespace detail

/// Shortest Berge path length found by explicit search over alternating
/// vertex/edge sequences, independent of the 2-section reduction. Intended
/// for small instances (roughly n <= 13, at most 8 edges).
inline std::optional<int> berge_path_oracle(const Hypergraph& h, Vertex u,
                                            Vertex v) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) return 0;
  const int longest =
      std::min<int>(static_cast<int>(h.edge_count()), h.order() - 1);
  std::vector<char> used_vertex(static_cast<std::size_t>(h.order()) + 1, 0);
  std::vector<char> used_edge(h.edge_count(), 0);
  used_vertex[u] = 1;
  for (int len = 1; len <= longest; ++len)
    if (detail::berge_extend(h, u, v, len, used_vertex, used_edge)) return len;
  return std::nullopt;
}

}  // namespace hgwiener
