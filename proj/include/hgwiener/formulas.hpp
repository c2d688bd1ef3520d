#pragma once

#include <optional>

#include "errors.hpp"

namespace hgwiener {

inline long long choose2(long long m) { return m * (m - 1) / 2; }

namespace detail {

inline void check_remainder_args(long long k, long long r) {
  if (k < 2) throw domain_error("uniformity must be at least 2");
  if (r < 0 || r >= k) throw domain_error("remainder must satisfy 0 <= r < k");
}

inline void check_isolated_count(long long ell, long long k) {
  if (ell < 1 || ell >= k)
    throw domain_error("isolated-vertex count must satisfy 1 <= ell < k");
}

}  // namespace detail

/// Wiener index of the extremal path with n = k*s + r vertices. Evaluated
/// as (2k^2 s^3 + 6rks^2 + 6r^2 s + (k^2-3k)s + 3r(r-1)) / 6 in exact
/// integer arithmetic; the numerator is always divisible by 6.
inline long long path_wiener(long long s, long long k, long long r) {
  detail::check_remainder_args(k, r);
  if (s < 0) throw domain_error("block count must be nonnegative");
  const long long num = 2 * k * k * s * s * s + 6 * r * k * s * s +
                        6 * r * r * s + (k * k - 3 * k) * s + 3 * r * (r - 1);
  if (num % 6 != 0)
    throw non_integer_error("path Wiener formula produced a non-integer");
  return num / 6;
}

/// Distance-sum bound from a pendant vertex, large-remainder regime
/// (applies when k - ell <= r).
inline long long sum_bound_large_remainder(long long ell, long long k,
                                           long long s, long long r) {
  detail::check_remainder_args(k, r);
  detail::check_isolated_count(ell, k);
  if (s < 0) throw domain_error("block count must be nonnegative");
  return k * s * s + ell * s + r * (2 * s + 1);
}

/// Distance-sum bound from a pendant vertex, small-remainder regime
/// (applies when k - ell > r).
inline long long sum_bound_small_remainder(long long ell, long long k,
                                           long long s, long long r) {
  detail::check_remainder_args(k, r);
  detail::check_isolated_count(ell, k);
  if (s < 0) throw domain_error("block count must be nonnegative");
  return k * s * s + ell * s + 2 * r * s;
}

/// Parameters of the induction step: removing a good edge isolates `isolated`
/// vertices and leaves a core of n - isolated = k*s + r vertices.
struct BoundParams {
  long long isolated = 0;  // in [1, k-1]
  long long s = 0;
  long long r = 0;  // in [0, k-1]

  static BoundParams of(long long n, long long isolated, long long k) {
    detail::check_isolated_count(isolated, k);
    if (n <= isolated) throw domain_error("core component must be nonempty");
    return BoundParams{isolated, (n - isolated) / k, (n - isolated) % k};
  }
};

/// Upper bound on the sum of distances from an isolated pendant vertex to
/// the core component.
inline long long distance_sum_bound(const BoundParams& p, long long k) {
  detail::check_isolated_count(p.isolated, k);
  return (k - p.isolated <= p.r)
             ? sum_bound_large_remainder(p.isolated, k, p.s, p.r)
             : sum_bound_small_remainder(p.isolated, k, p.s, p.r);
}

/// Upper bound on the pendant vertex's eccentricity within the core.
inline long long eccentricity_bound(const BoundParams& p, long long k) {
  detail::check_isolated_count(p.isolated, k);
  return (p.r < k - p.isolated) ? 2 * p.s : 2 * p.s + 1;
}

/// Residuals of the two closing identities. Exactly one case applies to a
/// given (r, ell): `carry` when the rejoined vertices complete a new block
/// (r + ell >= k), `plain` otherwise. On their domains the contracts are
/// carry = (k - ell - r)^2 and plain = ell * r.
struct IdentityResiduals {
  std::optional<long long> carry;
  std::optional<long long> plain;
};

inline IdentityResiduals identity_residuals(long long s, long long k,
                                            long long r, long long ell) {
  detail::check_remainder_args(k, r);
  detail::check_isolated_count(ell, k);
  if (s < 0) throw domain_error("block count must be nonnegative");
  IdentityResiduals out;
  if (r + ell >= k) {
    out.carry = path_wiener(s + 1, k, r + ell - k) -
                (path_wiener(s, k, r) +
                 ell * sum_bound_large_remainder(ell, k, s, r) + choose2(ell));
  } else {
    out.plain = path_wiener(s, k, r + ell) -
                (path_wiener(s, k, r) +
                 ell * sum_bound_small_remainder(ell, k, s, r) + choose2(ell));
  }
  return out;
}

/// Maximum Wiener index over connected k-uniform hypergraphs of order n.
inline long long max_wiener(long long n, long long k) {
  if (k < 2 || n < k) throw domain_error("max_wiener requires n >= k >= 2");
  return path_wiener(n / k, k, n % k);
}

}  // namespace hgwiener
