#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hgwiener {

using Vertex = int;
using Edge = std::vector<Vertex>;  // strictly increasing vertex labels

/// A k-uniform hypergraph on vertices 1..n.
///
/// Values are immutable after construction. Edges are stored as strictly
/// increasing k-tuples in lexicographic order, and the vertex -> incident
/// edge index map is precomputed so BFS can walk the 2-section without
/// materializing it.
class Hypergraph {
 public:
  Hypergraph(int n, int k, std::vector<Edge> edges)
      : n_(n), k_(k), edges_(std::move(edges)) {
    if (n_ < 1) throw domain_error("vertex count must be positive");
    if (k_ < 1 || k_ > n_)
      throw domain_error("uniformity must satisfy 1 <= k <= n");
    for (auto& e : edges_) {
      if (static_cast<int>(e.size()) != k_)
        throw domain_error("edge arity differs from uniformity");
      std::sort(e.begin(), e.end());
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n_)
          throw domain_error("vertex label out of range");
        if (i > 0 && e[i] == e[i - 1])
          throw domain_error("duplicate vertex within edge");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i] == edges_[i - 1]) throw domain_error("duplicate edge");
    incident_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (std::size_t ei = 0; ei < edges_.size(); ++ei)
      for (Vertex v : edges_[ei]) incident_[v].push_back(static_cast<int>(ei));
  }

  int order() const noexcept { return n_; }
  int uniformity() const noexcept { return k_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// Indices into edges() of the edges containing v.
  const std::vector<int>& incident(Vertex v) const {
    check_vertex(v);
    return incident_[v];
  }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw domain_error("vertex label out of range");
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

// Tokens separated by single spaces; empty tokens are a format error.
inline std::vector<std::string_view> split_fields(std::string_view line,
                                                  int line_no) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t sp = line.find(' ', pos);
    std::string_view tok = (sp == std::string_view::npos)
                               ? line.substr(pos)
                               : line.substr(pos, sp - pos);
    if (tok.empty())
      throw parse_error("line " + std::to_string(line_no) +
                        ": fields must be separated by single spaces");
    fields.push_back(tok);
    if (sp == std::string_view::npos) break;
    pos = sp + 1;
  }
  return fields;
}

inline int parse_label(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw parse_error("line " + std::to_string(line_no) + ": '" +
                      std::string(tok) + "' is not a nonnegative integer");
  return value;
}

}  // namespace detail

/// Parses the hypergraph file format: header line "<n> <k>", then one edge
/// per non-empty line as k strictly increasing labels. Lines starting with
/// '#' are ignored; the trailing newline is optional on read.
inline Hypergraph parse(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> content;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    content.emplace_back(line_no, line);
  }
  if (content.empty()) throw parse_error("malformed header: empty input");

  auto header = detail::split_fields(content[0].second, content[0].first);
  if (header.size() != 2)
    throw parse_error("line " + std::to_string(content[0].first) +
                      ": malformed header, expected '<n> <k>'");
  const int n = detail::parse_label(header[0], content[0].first);
  const int k = detail::parse_label(header[1], content[0].first);
  if (n < 1 || k < 1 || k > n)
    throw parse_error("line " + std::to_string(content[0].first) +
                      ": malformed header, need 1 <= k <= n");

  std::vector<Edge> edges;
  for (std::size_t li = 1; li < content.size(); ++li) {
    const auto [no, line] = content[li];
    auto fields = detail::split_fields(line, no);
    if (static_cast<int>(fields.size()) != k)
      throw parse_error("line " + std::to_string(no) +
                        ": edge of wrong arity, expected " +
                        std::to_string(k) + " labels");
    Edge e(k);
    for (int i = 0; i < k; ++i) {
      e[i] = detail::parse_label(fields[i], no);
      if (e[i] < 1 || e[i] > n)
        throw parse_error("line " + std::to_string(no) +
                          ": vertex label out of [1," + std::to_string(n) +
                          "]");
      if (i > 0 && e[i] == e[i - 1])
        throw parse_error("line " + std::to_string(no) +
                          ": duplicate vertex within edge");
      if (i > 0 && e[i] < e[i - 1])
        throw parse_error("line " + std::to_string(no) +
                          ": edge labels not strictly increasing");
    }
    edges.push_back(std::move(e));
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) throw parse_error("duplicate edge");
  return Hypergraph(n, k, std::move(edges));
}

/// Serializes in the file format, edges in lexicographic order, with a
/// trailing newline. Byte-stable for equal hypergraphs.
inline std::string to_text(const Hypergraph& h) {
  std::string out =
      std::to_string(h.order()) + ' ' + std::to_string(h.uniformity()) + '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

inline Hypergraph add_edge(const Hypergraph& h, Edge e) {
  std::sort(e.begin(), e.end());
  if (h.has_edge(e)) throw domain_error("edge already present");
  std::vector<Edge> edges = h.edges();
  edges.push_back(std::move(e));
  return Hypergraph(h.order(), h.uniformity(), std::move(edges));
}

inline Hypergraph remove_edge(const Hypergraph& h, const Edge& e) {
  Edge key = e;
  std::sort(key.begin(), key.end());
  std::vector<Edge> edges = h.edges();
  auto it = std::find(edges.begin(), edges.end(), key);
  if (it == edges.end()) throw domain_error("edge not present");
  edges.erase(it);
  return Hypergraph(h.order(), h.uniformity(), std::move(edges));
}

/// Applies a relabeling map (image[v] is the new label of vertex v; image is
/// 1-based with image[0] unused) and returns the renamed hypergraph.
inline Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& image) {
  if (static_cast<int>(image.size()) != h.order() + 1)
    throw domain_error("relabel image must have n+1 entries");
  std::vector<Edge> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    Edge m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = image[e[i]];
    edges.push_back(std::move(m));
  }
  return Hypergraph(h.order(), h.uniformity(), std::move(edges));
}

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, lexicographic
};

/// 2-section: u ~ v iff u != v and some hyperedge contains both. Berge
/// distance equals shortest-path distance in this graph.
inline SimpleGraph two_section(const Hypergraph& h) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        pairs.emplace_back(e[i], e[j]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return SimpleGraph{h.order(), std::move(pairs)};
}

namespace detail {

// Connected components, optionally pretending edge `skip_edge` was removed.
// Parts are sorted internally and ordered by smallest member.
inline std::vector<std::vector<Vertex>> components_skipping(const Hypergraph& h,
                                                            int skip_edge) {
  const int n = h.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> edge_done(h.edge_count(), 0);
  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> queue;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    queue.clear();
    queue.push_back(s);
    seen[s] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex u = queue[qi];
      for (int ei : h.incident(u)) {
        if (ei == skip_edge || edge_done[ei]) continue;
        edge_done[ei] = 1;
        for (Vertex w : h.edges()[ei])
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
    std::sort(queue.begin(), queue.end());
    parts.push_back(queue);
  }
  return parts;
}

inline bool connected_skipping(const Hypergraph& h, int skip_edge) {
  const int n = h.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> edge_done(h.edge_count(), 0);
  std::vector<Vertex> queue{1};
  seen[1] = 1;
  int reached = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (int ei : h.incident(queue[qi])) {
      if (ei == skip_edge || edge_done[ei]) continue;
      edge_done[ei] = 1;
      for (Vertex w : h.edges()[ei])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
    }
  }
  return reached == n;
}

}  // namespace detail

/// Connected components of the 2-section; isolated vertices are singletons.
inline std::vector<std::vector<Vertex>> components(const Hypergraph& h) {
  return detail::components_skipping(h, -1);
}

inline bool is_connected(const Hypergraph& h) {
  return detail::connected_skipping(h, -1);
}

}  // namespace hgwiener
