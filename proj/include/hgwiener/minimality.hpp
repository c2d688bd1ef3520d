#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hgwiener {

/// True iff deleting any single edge disconnects the hypergraph.
inline bool is_edge_minimal(const Hypergraph& h) {
  if (!is_connected(h))
    throw disconnected_error("edge-minimality requires a connected hypergraph");
  for (std::size_t ei = 0; ei < h.edge_count(); ++ei)
    if (detail::connected_skipping(h, static_cast<int>(ei))) return false;
  return true;
}

/// Outcome of removing one good edge: the surviving core component plus the
/// vertices it isolates. When removal leaves only singletons (a single-edge
/// hypergraph on n = k vertices), the core is the lowest-labeled vertex.
struct GoodEdgeSplit {
  Edge removed;
  std::vector<Vertex> core;      // V', sorted
  std::vector<Vertex> isolated;  // sorted; size is the count of new singletons
};

/// The split for one edge, or nullopt when the edge is not good: its removal
/// either keeps the hypergraph connected or leaves two non-trivial components.
inline std::optional<GoodEdgeSplit> good_edge_split(const Hypergraph& h,
                                                    std::size_t edge_index) {
  auto parts = detail::components_skipping(h, static_cast<int>(edge_index));
  if (parts.size() < 2) return std::nullopt;  // removal did not disconnect
  int big = -1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() <= 1) continue;
    if (big >= 0) return std::nullopt;  // two non-trivial components
    big = static_cast<int>(i);
  }
  GoodEdgeSplit split;
  split.removed = h.edges()[edge_index];
  std::size_t core_part = big >= 0 ? static_cast<std::size_t>(big) : 0;
  split.core = parts[core_part];
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i != core_part)
      split.isolated.insert(split.isolated.end(), parts[i].begin(),
                            parts[i].end());
  return split;
}

/// All good-edge splits of h, in edge order. Meaningful for edge-minimal
/// hypergraphs, where every returned split isolates at least one vertex.
inline std::vector<GoodEdgeSplit> good_edge_splits(const Hypergraph& h) {
  std::vector<GoodEdgeSplit> splits;
  for (std::size_t ei = 0; ei < h.edge_count(); ++ei)
    if (auto split = good_edge_split(h, ei)) splits.push_back(std::move(*split));
  return splits;
}

/// Lexicographically smallest edge whose removal leaves at most one
/// component of size greater than one.
inline Edge find_good_edge(const Hypergraph& h) {
  if (h.edge_count() == 0)
    throw domain_error("find_good_edge requires at least one edge");
  if (!is_edge_minimal(h))
    throw domain_error("find_good_edge requires an edge-minimal hypergraph");
  for (std::size_t ei = 0; ei < h.edge_count(); ++ei)
    if (good_edge_split(h, ei)) return h.edges()[ei];
  throw no_good_edge_error(
      "no edge removal leaves at most one non-trivial component");
}

}  // namespace hgwiener
