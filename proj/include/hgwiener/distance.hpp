#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hgwiener {

/// BFS layer structure from one source vertex. layer_sizes[i-1] is the
/// number of vertices at distance exactly i; the source itself is excluded.
struct DistanceProfile {
  Vertex source = 0;
  std::vector<int> layer_sizes;
  long long unreachable_count = 0;

  int eccentricity() const { return static_cast<int>(layer_sizes.size()); }

  long long distance_sum() const {
    long long sum = 0;
    for (std::size_t i = 0; i < layer_sizes.size(); ++i)
      sum += static_cast<long long>(i + 1) * layer_sizes[i];
    return sum;
  }
};

/// Distances from src to every vertex; -1 marks unreachable. Index 0 unused.
inline std::vector<int> bfs_distances(const Hypergraph& h, Vertex src) {
  h.check_vertex(src);
  std::vector<int> dist(static_cast<std::size_t>(h.order()) + 1, -1);
  std::vector<char> edge_done(h.edge_count(), 0);
  std::vector<Vertex> queue;
  queue.reserve(h.order());
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex u = queue[qi];
    for (int ei : h.incident(u)) {
      if (edge_done[ei]) continue;
      edge_done[ei] = 1;
      for (Vertex w : h.edges()[ei])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

/// Berge distance between u and v, or nullopt when no Berge path exists.
inline std::optional<int> distance(const Hypergraph& h, Vertex u, Vertex v) {
  h.check_vertex(u);
  h.check_vertex(v);
  if (u == v) return 0;
  int d = bfs_distances(h, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

inline DistanceProfile distance_profile(const Hypergraph& h, Vertex v) {
  auto dist = bfs_distances(h, v);
  int ecc = 0;
  for (Vertex u = 1; u <= h.order(); ++u) ecc = std::max(ecc, dist[u]);
  DistanceProfile profile;
  profile.source = v;
  profile.layer_sizes.assign(ecc, 0);
  for (Vertex u = 1; u <= h.order(); ++u) {
    if (dist[u] < 0)
      ++profile.unreachable_count;
    else if (dist[u] > 0)
      ++profile.layer_sizes[dist[u] - 1];
  }
  return profile;
}

/// Sum of Berge distances over unordered vertex pairs. Refuses disconnected
/// input instead of summing partial distances.
inline long long wiener(const Hypergraph& h) {
  const int n = h.order();
  long long total = 0;
  for (Vertex v = 1; v <= n; ++v) {
    auto dist = bfs_distances(h, v);
    for (Vertex u = 1; u <= n; ++u) {
      if (dist[u] < 0)
        throw disconnected_error("Wiener index requires a connected hypergraph");
      total += dist[u];
    }
  }
  return total / 2;
}

}  // namespace hgwiener
