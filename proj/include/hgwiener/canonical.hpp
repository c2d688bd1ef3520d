#pragma once

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hgwiener {

/// Lexicographically smallest edge set over all vertex relabelings. Two
/// hypergraphs are isomorphic iff their canonical forms are equal.
struct CanonicalForm {
  int n = 0;
  int k = 0;
  std::vector<Edge> edges;

  bool operator==(const CanonicalForm& o) const {
    return n == o.n && k == o.k && edges == o.edges;
  }
  bool operator<(const CanonicalForm& o) const {
    return std::tie(n, k, edges) < std::tie(o.n, o.k, o.edges);
  }
};

/// Exact canonicalization by sweeping all n! relabelings; guarded to n <= 10.
inline CanonicalForm canonical_form(const Hypergraph& h) {
  const int n = h.order();
  if (n > 10)
    throw search_space_error(
        "canonical form sweeps all n! relabelings and is limited to n <= 10");
  std::vector<Vertex> image(n);  // image[i] is the new label of vertex i+1
  std::iota(image.begin(), image.end(), 1);
  std::vector<Edge> best = h.edges();
  std::vector<Edge> work(h.edge_count(), Edge(h.uniformity()));
  do {
    for (std::size_t ei = 0; ei < h.edge_count(); ++ei) {
      const Edge& e = h.edges()[ei];
      Edge& m = work[ei];
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = image[e[i] - 1];
      std::sort(m.begin(), m.end());
    }
    std::sort(work.begin(), work.end());
    if (work < best) best = work;
  } while (std::next_permutation(image.begin(), image.end()));
  return CanonicalForm{n, h.uniformity(), std::move(best)};
}

}  // namespace hgwiener
