#include <catch2/catch_amalgamated.hpp>
#include <hgwiener/hgwiener.hpp>

#include "test_support.hpp"

using namespace hgwiener;

TEST_CASE("berge_path_oracle examples") {
  CHECK(berge_path_oracle(tight_path(5, 3), 2, 4) == 2);
  CHECK(berge_path_oracle(Hypergraph(3, 3, {{1, 2, 3}}), 1, 3) == 1);
  CHECK(berge_path_oracle(Hypergraph(4, 3, {{1, 2, 3}}), 1, 4) == std::nullopt);
  CHECK(berge_path_oracle(tight_path(5, 3), 4, 4) == 0);
  CHECK(berge_path_oracle(tight_path(13, 4), 1, 13) == 6);
  CHECK_THROWS_AS(berge_path_oracle(tight_path(5, 3), 1, 9), domain_error);
}

TEST_CASE("oracle requires distinct edges, not just distinct vertices") {
  // one edge only: every pair inside it is at distance 1, and a second step
  // cannot reuse the edge
  const auto h = Hypergraph(5, 3, {{1, 2, 3}, {3, 4, 5}});
  CHECK(berge_path_oracle(h, 1, 2) == 1);
  CHECK(berge_path_oracle(h, 1, 4) == 2);
  CHECK(berge_path_oracle(h, 1, 5) == 2);
}

TEST_CASE("oracle agrees with the 2-section reduction on random instances") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const auto h = test_support::random_connected(rng);
    for (Vertex u = 1; u <= h.order(); ++u) {
      const auto dist = bfs_distances(h, u);
      for (Vertex v = u; v <= h.order(); ++v) {
        const auto oracle = berge_path_oracle(h, u, v);
        REQUIRE(oracle.has_value());
        CHECK(*oracle == dist[v]);
      }
    }
  }
}

TEST_CASE("oracle agrees with distance on disconnected instances") {
  const auto h = Hypergraph(7, 3, {{1, 2, 3}, {2, 3, 4}, {5, 6, 7}});
  for (Vertex u = 1; u <= 7; ++u)
    for (Vertex v = 1; v <= 7; ++v)
      CHECK(berge_path_oracle(h, u, v) == distance(h, u, v));
}
