#include <catch2/catch_amalgamated.hpp>
#include <hgwiener/hgwiener.hpp>

using namespace hgwiener;

TEST_CASE("path_wiener closed form") {
  CHECK(path_wiener(1, 2, 1) == 4);
  CHECK(path_wiener(3, 4, 1) == 185);
  CHECK(path_wiener(2, 3, 0) == 24);
  for (long long k = 2; k <= 10; ++k) CHECK(path_wiener(1, k, 0) == choose2(k));
  CHECK_THROWS_AS(path_wiener(-1, 3, 0), domain_error);
  CHECK_THROWS_AS(path_wiener(1, 1, 0), domain_error);
  CHECK_THROWS_AS(path_wiener(1, 3, 3), domain_error);
}

TEST_CASE("path_wiener matches the graph-path cubic for k = 2") {
  for (long long s = 0; s <= 12; ++s) {
    for (long long r = 0; r <= 1; ++r) {
      const long long n = 2 * s + r;
      if (n < 1) continue;
      CHECK(path_wiener(s, 2, r) == (n * n * n - n) / 6);
    }
  }
}

TEST_CASE("pendant distance-sum bounds") {
  // s = 0 collapses the large-remainder bound to r
  for (long long k = 2; k <= 6; ++k)
    for (long long r = 0; r < k; ++r)
      for (long long ell = 1; ell < k; ++ell) {
        CHECK(sum_bound_large_remainder(ell, k, 0, r) == r);
        CHECK(sum_bound_small_remainder(ell, k, 0, r) == 0);
      }
  // r = 0 makes the two regimes coincide
  for (long long k = 2; k <= 6; ++k)
    for (long long s = 0; s <= 5; ++s)
      for (long long ell = 1; ell < k; ++ell)
        CHECK(sum_bound_large_remainder(ell, k, s, 0) ==
              sum_bound_small_remainder(ell, k, s, 0));
  CHECK(sum_bound_large_remainder(1, 4, 3, 1) == 46);
  CHECK(sum_bound_small_remainder(1, 4, 3, 0) == 39);
  CHECK_THROWS_AS(sum_bound_large_remainder(0, 4, 3, 1), domain_error);
  CHECK_THROWS_AS(sum_bound_large_remainder(4, 4, 3, 1), domain_error);
}

TEST_CASE("distance_sum_bound selects the regime by k - ell vs r") {
  CHECK(distance_sum_bound(BoundParams{2, 1, 1}, 3) == 8);   // k-ell <= r
  CHECK(distance_sum_bound(BoundParams{1, 3, 0}, 4) == 39);  // k-ell > r
  CHECK(distance_sum_bound(BoundParams{2, 0, 1}, 3) == 1);   // s' = 0
  CHECK(distance_sum_bound(BoundParams{1, 0, 0}, 3) == 0);
  CHECK(BoundParams::of(5, 2, 3).s == 1);
  CHECK(BoundParams::of(5, 2, 3).r == 0);
  CHECK_THROWS_AS(BoundParams::of(5, 3, 3), domain_error);
}

TEST_CASE("eccentricity_bound") {
  CHECK(eccentricity_bound(BoundParams{1, 3, 0}, 4) == 6);
  CHECK(eccentricity_bound(BoundParams{2, 1, 1}, 3) == 3);
  CHECK(eccentricity_bound(BoundParams{1, 0, 0}, 2) == 0);
}

TEST_CASE("identity residual examples") {
  const auto a = identity_residuals(2, 4, 3, 1);
  REQUIRE(a.carry.has_value());
  CHECK_FALSE(a.plain.has_value());
  CHECK(*a.carry == 0);

  const auto b = identity_residuals(2, 4, 0, 1);
  REQUIRE(b.plain.has_value());
  CHECK_FALSE(b.carry.has_value());
  CHECK(*b.plain == 0);

  const auto c = identity_residuals(1, 5, 1, 2);
  REQUIRE(c.plain.has_value());
  CHECK(*c.plain == 2);

  CHECK_THROWS_AS(identity_residuals(1, 4, 4, 1), domain_error);
  CHECK_THROWS_AS(identity_residuals(1, 4, 1, 0), domain_error);
}

TEST_CASE("identity residuals over a small grid") {
  for (long long s = 0; s <= 6; ++s)
    for (long long k = 2; k <= 6; ++k)
      for (long long r = 0; r < k; ++r)
        for (long long ell = 1; ell < k; ++ell) {
          const auto res = identity_residuals(s, k, r, ell);
          if (r + ell >= k) {
            REQUIRE(res.carry.has_value());
            CHECK(*res.carry == (k - ell - r) * (k - ell - r));
          } else {
            REQUIRE(res.plain.has_value());
            CHECK(*res.plain == ell * r);
          }
        }
}

TEST_CASE("max_wiener") {
  CHECK(max_wiener(13, 4) == 185);
  CHECK(max_wiener(6, 3) == 24);
  CHECK(max_wiener(5, 3) == 14);
  for (long long n = 2; n <= 10; ++n) CHECK(max_wiener(n, n) == choose2(n));
  CHECK_THROWS_AS(max_wiener(3, 1), domain_error);
  CHECK_THROWS_AS(max_wiener(3, 4), domain_error);
}

TEST_CASE("closed form equals BFS on generated paths") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k; n <= 20; ++n)
      CHECK(max_wiener(n, k) == wiener(extremal_path(n, k)));
}

TEST_CASE("distance-sum bound is tight on extremal paths") {
  for (int k = 2; k <= 6; ++k) {
    for (int n = k + 1; n <= 24; ++n) {
      const auto path = extremal_path(n, k);
      CHECK(find_good_edge(path) == path.edges()[0]);
      const auto split = good_edge_split(path, 0);
      REQUIRE(split.has_value());
      const long long ell = static_cast<long long>(split->isolated.size());
      CHECK(ell == (n % k != 0 ? n % k : 1));
      const auto bp = BoundParams::of(n, ell, k);
      long long best_sum = -1;
      long long worst_ecc = -1;
      for (Vertex v : split->isolated) {
        const auto dist = bfs_distances(path, v);
        long long sum = 0;
        long long ecc = 0;
        for (Vertex u : split->core) {
          sum += dist[u];
          ecc = std::max<long long>(ecc, dist[u]);
        }
        best_sum = std::max(best_sum, sum);
        worst_ecc = std::max(worst_ecc, ecc);
      }
      CHECK(best_sum == distance_sum_bound(bp, k));
      CHECK(worst_ecc <= eccentricity_bound(bp, k));
    }
  }
}
