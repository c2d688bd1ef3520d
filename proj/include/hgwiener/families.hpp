#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hgwiener {

/// Block decomposition n = k*s + r with 0 <= r < k.
struct PathParams {
  int n = 0;
  int k = 0;
  int s = 0;
  int r = 0;

  static PathParams of(int n, int k) {
    if (k < 1) throw domain_error("uniformity must be positive");
    if (n < k) throw domain_error("order must be at least the uniformity");
    return PathParams{n, k, n / k, n % k};
  }
};

namespace detail {

inline Edge interval(int lo, int hi) {
  Edge e(static_cast<std::size_t>(hi - lo + 1));
  std::iota(e.begin(), e.end(), lo);
  return e;
}

}  // namespace detail

/// Tight path on [n] for k not dividing n: s consecutive blocks of width k
/// plus their copies shifted right by the remainder r. 2s edges in total.
inline Hypergraph tight_path(int n, int k) {
  if (k < 2) throw domain_error("tight_path requires k >= 2");
  if (n < k) throw domain_error("tight_path requires n >= k");
  if (n % k == 0)
    throw domain_error(
        "order divisible by uniformity: use offset_tight_path instead");
  const PathParams p = PathParams::of(n, k);
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(p.s));
  for (int i = 1; i <= p.s; ++i)
    edges.push_back(detail::interval((i - 1) * k + 1, i * k));
  for (int i = 1; i <= p.s; ++i)
    edges.push_back(detail::interval(p.r + (i - 1) * k + 1, i * k + p.r));
  return Hypergraph(n, k, std::move(edges));
}

/// Tight path on [n] for k | n: s consecutive blocks plus s-1 copies shifted
/// right by the offset x, 0 < x < k. 2s-1 edges in total.
inline Hypergraph offset_tight_path(int n, int k, int x) {
  if (k < 2) throw domain_error("offset_tight_path requires k >= 2");
  if (n < k) throw domain_error("offset_tight_path requires n >= k");
  if (n % k != 0)
    throw domain_error(
        "order not divisible by uniformity: use tight_path instead");
  if (x <= 0 || x >= k) throw domain_error("offset must satisfy 0 < x < k");
  const PathParams p = PathParams::of(n, k);
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(p.s) - 1);
  for (int i = 1; i <= p.s; ++i)
    edges.push_back(detail::interval((i - 1) * k + 1, i * k));
  for (int i = 1; i <= p.s - 1; ++i)
    edges.push_back(detail::interval((i - 1) * k + 1 + x, i * k + x));
  return Hypergraph(n, k, std::move(edges));
}

/// The Wiener-maximizing path for the given order and uniformity.
inline Hypergraph extremal_path(int n, int k) {
  return (n % k != 0) ? tight_path(n, k) : offset_tight_path(n, k, 1);
}

/// Chain of m = (n-1)/(k-1) edges, consecutive edges sharing one vertex.
inline Hypergraph loose_path(int n, int k) {
  if (k < 2) throw domain_error("loose_path requires k >= 2");
  if (n < k) throw domain_error("loose_path requires n >= k");
  if ((n - 1) % (k - 1) != 0)
    throw domain_error("loose_path requires n = m(k-1)+1");
  const int m = (n - 1) / (k - 1);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 1; i <= m; ++i)
    edges.push_back(detail::interval((i - 1) * (k - 1) + 1, (i - 1) * (k - 1) + k));
  return Hypergraph(n, k, std::move(edges));
}

/// m = (n-1)/(k-1) edges pairwise sharing exactly the center vertex 1.
inline Hypergraph loose_star(int n, int k) {
  if (k < 2) throw domain_error("loose_star requires k >= 2");
  if (n < k) throw domain_error("loose_star requires n >= k");
  if ((n - 1) % (k - 1) != 0)
    throw domain_error("loose_star requires n = m(k-1)+1");
  const int m = (n - 1) / (k - 1);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 1; i <= m; ++i) {
    Edge e = detail::interval(2 + (i - 1) * (k - 1), 1 + i * (k - 1));
    e.insert(e.begin(), 1);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, k, std::move(edges));
}

/// All C(n,k) possible edges.
inline Hypergraph complete(int n, int k) {
  if (k < 1) throw domain_error("complete requires k >= 1");
  if (n < k) throw domain_error("complete requires n >= k");
  std::vector<Edge> edges;
  Edge pick = detail::interval(1, k);
  while (true) {
    edges.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph(n, k, std::move(edges));
}

/// Star with center 1 and every k-set through the center as an edge. For
/// k >= 3 every vertex pair shares an edge, so the Wiener index is C(n,2);
/// for k = 2 the construction would be the graph star, which does not attain
/// that value, so k < 3 is rejected.
inline Hypergraph dense_star(int n, int k) {
  if (k < 3) throw domain_error("dense_star requires k >= 3");
  if (n <= k) throw domain_error("dense_star requires n > k");
  std::vector<Edge> edges;
  Edge rest = detail::interval(2, k);  // (k-1)-subset of {2..n}
  while (true) {
    Edge e = rest;
    e.insert(e.begin(), 1);
    edges.push_back(std::move(e));
    int i = k - 2;
    while (i >= 0 && rest[i] == n - (k - 2 - i)) --i;
    if (i < 0) break;
    ++rest[i];
    for (int j = i + 1; j < k - 1; ++j) rest[j] = rest[j - 1] + 1;
  }
  return Hypergraph(n, k, std::move(edges));
}

/// The Fano plane: 7 points, 7 lines, every pair of points on one line.
inline Hypergraph fano() {
  return Hypergraph(7, 3,
                    {{1, 2, 3},
                     {1, 4, 5},
                     {1, 6, 7},
                     {2, 4, 6},
                     {2, 5, 7},
                     {3, 4, 7},
                     {3, 5, 6}});
}

}  // namespace hgwiener
