#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "formulas.hpp"
#include "hypergraph.hpp"

namespace hgwiener {

/// max_edges empty means a full power-set sweep over all C(n,k) possible
/// edges; otherwise only edge sets of at most max_edges edges are visited.
struct SearchLimit {
  std::optional<int> max_edges{};
};

struct SearchSpace {
  int n = 0;
  int k = 0;
  int edge_universe = 0;  // number of possible k-subsets
  unsigned long long candidates = 0;
  std::optional<int> max_edges{};

  std::string describe() const {
    if (!max_edges)
      return "full (2^" + std::to_string(edge_universe) + " = " +
             std::to_string(candidates) + " candidates)";
    return "edge-bounded (max_edges " + std::to_string(*max_edges) + ", " +
           std::to_string(candidates) + " candidates)";
  }
};

namespace detail {

inline unsigned long long binom64(int n, int r) {
  static const auto table = [] {
    std::array<std::array<unsigned long long, 65>, 65> t{};
    t[0][0] = 1;
    for (int i = 1; i <= 64; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (r < 0 || r > n) return 0;
  return table[n][r];
}

// Candidate edge sets are bitmasks over the lexicographically ranked
// k-subsets of [1,n]; bit j selects the j-th subset. A full sweep walks
// masks in increasing numeric order; an edge-bounded sweep walks popcount
// classes in increasing size, each class in increasing numeric order.
struct CandidateSpace {
  int n = 0;
  int k = 0;
  int universe = 0;
  std::optional<int> max_edges{};
  unsigned long long total = 0;
  std::vector<unsigned long long> class_prefix;  // bounded mode only
  std::vector<Edge> tuples;
  std::vector<std::uint64_t> vsets;  // vertex bitmasks, bit v-1 for vertex v
  std::uint64_t full_mask = 0;
};

inline constexpr unsigned long long kFullSweepCap = 1ull << 21;
inline constexpr unsigned long long kBoundedSweepCap = 1ull << 25;

inline CandidateSpace plan_candidates(int n, int k, SearchLimit limit) {
  if (k < 2) throw domain_error("enumeration requires k >= 2");
  if (n < k) throw domain_error("enumeration requires n >= k");
  if (n > 32) throw search_space_error("enumeration is limited to n <= 32");
  CandidateSpace sp;
  sp.n = n;
  sp.k = k;
  const unsigned long long universe = binom64(n, k);
  if (universe > 64)
    throw search_space_error("edge universe C(" + std::to_string(n) + "," +
                             std::to_string(k) + ") = " +
                             std::to_string(universe) +
                             " exceeds the 64-bit candidate mask");
  sp.universe = static_cast<int>(universe);
  sp.full_mask = (1ull << n) - 1;
  sp.tuples.reserve(sp.universe);
  sp.vsets.reserve(sp.universe);
  Edge pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    std::uint64_t vs = 0;
    for (Vertex v : pick) vs |= 1ull << (v - 1);
    sp.tuples.push_back(pick);
    sp.vsets.push_back(vs);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!limit.max_edges) {
    if (sp.universe > 21)
      throw search_space_error(
          "full sweep of 2^" + std::to_string(sp.universe) +
          " candidates exceeds the 2^21 cap; pass an edge bound");
    sp.total = 1ull << sp.universe;
  } else {
    int bound = *limit.max_edges;
    if (bound < 0) throw domain_error("max_edges must be nonnegative");
    bound = std::min(bound, sp.universe);
    sp.max_edges = bound;
    sp.class_prefix.assign(static_cast<std::size_t>(bound) + 2, 0);
    unsigned long long run = 0;
    for (int m = 0; m <= bound; ++m) {
      sp.class_prefix[m] = run;
      run += binom64(sp.universe, m);
      if (run > kBoundedSweepCap)
        throw search_space_error("edge-bounded sweep of " +
                                 std::to_string(run) +
                                 "+ candidates exceeds the 2^25 cap");
    }
    sp.class_prefix[bound + 1] = run;
    sp.total = run;
  }
  return sp;
}

// Colex unranking: the rank-th popcount-m mask in increasing numeric order.
inline std::uint64_t colex_unrank(unsigned long long rank, int m,
                                  int universe) {
  std::uint64_t mask = 0;
  for (int i = m; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < universe && binom64(c + 1, i) <= rank) ++c;
    mask |= 1ull << c;
    rank -= binom64(c, i);
  }
  return mask;
}

// Next mask with the same popcount in increasing numeric order.
inline std::uint64_t gosper_next(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t carry = x + low;
  return carry | (((x ^ carry) / low) >> 2);
}

struct Cursor {
  const CandidateSpace* sp;
  unsigned long long idx;
  int cls;  // popcount class in bounded mode, -1 in full mode
  std::uint64_t mask;

  Cursor(const CandidateSpace& space, unsigned long long start)
      : sp(&space), idx(start), cls(-1), mask(start) {
    if (!sp->max_edges || start >= sp->total) return;
    cls = 0;
    while (start >= sp->class_prefix[cls + 1]) ++cls;
    mask = colex_unrank(start - sp->class_prefix[cls], cls, sp->universe);
  }

  void advance() {
    ++idx;
    if (idx >= sp->total) return;
    if (cls < 0) {
      mask = idx;
    } else if (idx >= sp->class_prefix[cls + 1]) {
      ++cls;
      mask = (1ull << cls) - 1;
    } else {
      mask = gosper_next(mask);
    }
  }
};

// Layered BFS over the selected edges; returns the reached vertex set and
// the sum of distances from the source to every reached vertex.
inline std::pair<std::uint64_t, long long> bfs_sum(
    const std::vector<std::uint64_t>& sel, std::uint64_t source_bit) {
  std::uint64_t reached = source_bit;
  std::uint64_t frontier = source_bit;
  long long sum = 0;
  int depth = 0;
  while (true) {
    std::uint64_t next = 0;
    for (std::uint64_t vs : sel)
      if (vs & frontier) next |= vs;
    next &= ~reached;
    if (next == 0) break;
    ++depth;
    sum += static_cast<long long>(depth) * std::popcount(next);
    reached |= next;
    frontier = next;
  }
  return {reached, sum};
}

inline void bfs_layer_masks(const std::vector<std::uint64_t>& sel,
                            std::uint64_t source_bit,
                            std::vector<std::uint64_t>& layers) {
  layers.clear();
  layers.push_back(source_bit);
  std::uint64_t reached = source_bit;
  std::uint64_t frontier = source_bit;
  while (true) {
    std::uint64_t next = 0;
    for (std::uint64_t vs : sel)
      if (vs & frontier) next |= vs;
    next &= ~reached;
    if (next == 0) break;
    layers.push_back(next);
    reached |= next;
    frontier = next;
  }
}

inline bool closure_connected_skipping(const std::vector<std::uint64_t>& sel,
                                       std::size_t omit, std::uint64_t full) {
  std::uint64_t reach = 1ull;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < sel.size(); ++i) {
      if (i == omit) continue;
      const std::uint64_t vs = sel[i];
      if ((vs & reach) && (vs & ~reach)) {
        reach |= vs;
        grew = true;
      }
    }
  }
  return reach == full;
}

inline void mask_components(const std::vector<std::uint64_t>& sel,
                            std::size_t omit, std::uint64_t full,
                            std::vector<std::uint64_t>& out) {
  out.clear();
  std::uint64_t remaining = full;
  while (remaining) {
    std::uint64_t comp = remaining & (~remaining + 1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < sel.size(); ++i) {
        if (i == omit) continue;
        const std::uint64_t vs = sel[i];
        if ((vs & comp) && (vs & ~comp)) {
          comp |= vs;
          grew = true;
        }
      }
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
}

inline Hypergraph mask_to_hypergraph(const CandidateSpace& sp,
                                     std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::uint64_t m = mask; m; m &= m - 1)
    edges.push_back(sp.tuples[std::countr_zero(m)]);
  return Hypergraph(sp.n, sp.k, std::move(edges));
}

}  // namespace detail

struct ClaimViolation {
  std::string kind;  // layer_bound | sum_bound | eccentricity_bound |
                     // induction_inequality
  long long lhs = 0;
  long long rhs = 0;
  Vertex pendant = 0;  // 0 when the check is not tied to one pendant vertex
  Edge removed;
  std::string hypergraph;  // instance in the file format
};

struct LemmaViolation {
  std::string hypergraph;
};

namespace detail {

struct SweepPartial {
  unsigned long long scanned = 0;
  unsigned long long connected = 0;
  unsigned long long edge_minimal = 0;
  long long max_wiener = -1;
  std::vector<std::uint64_t> maximizer_masks;
  std::vector<ClaimViolation> claim;
  std::vector<LemmaViolation> lemma;
};

inline void merge_into(SweepPartial& acc, SweepPartial&& part) {
  acc.scanned += part.scanned;
  acc.connected += part.connected;
  acc.edge_minimal += part.edge_minimal;
  if (part.max_wiener > acc.max_wiener) {
    acc.max_wiener = part.max_wiener;
    acc.maximizer_masks = std::move(part.maximizer_masks);
  } else if (part.max_wiener == acc.max_wiener && acc.max_wiener >= 0) {
    acc.maximizer_masks.insert(acc.maximizer_masks.end(),
                               part.maximizer_masks.begin(),
                               part.maximizer_masks.end());
  }
  acc.claim.insert(acc.claim.end(), std::make_move_iterator(part.claim.begin()),
                   std::make_move_iterator(part.claim.end()));
  acc.lemma.insert(acc.lemma.end(), std::make_move_iterator(part.lemma.begin()),
                   std::make_move_iterator(part.lemma.end()));
}

struct SweepScratch {
  std::vector<std::uint64_t> sel;
  std::vector<int> sel_idx;
  std::vector<std::uint64_t> sel_without;
  std::vector<std::uint64_t> layers;
  std::vector<long long> layer_core;
  std::vector<std::uint64_t> comps;
};

// Checks every good edge of a connected edge-minimal candidate: the BFS
// layer inequalities, the pendant distance-sum and eccentricity bounds, and
// the induction inequality relating W(h) to the core's Wiener index.
inline void check_lemma_and_claim(const CandidateSpace& sp, std::uint64_t mask,
                                  long long w_full, SweepScratch& sc,
                                  SweepPartial& pr) {
  const long long n = sp.n;
  const long long k = sp.k;
  bool any_good = false;
  for (std::size_t a = 0; a < sc.sel.size(); ++a) {
    mask_components(sc.sel, a, sp.full_mask, sc.comps);
    std::uint64_t core = 0;
    int big_count = 0;
    for (std::uint64_t c : sc.comps)
      if (std::popcount(c) > 1) {
        ++big_count;
        core = c;
      }
    if (big_count > 1) continue;  // not a good edge
    if (big_count == 0) core = sc.comps[0];  // all singletons: lowest vertex
    any_good = true;
    const std::uint64_t isolated = sp.full_mask & ~core;
    const long long ell = std::popcount(isolated);
    const Edge& removed = sp.tuples[sc.sel_idx[a]];
    const auto record = [&](const char* kind, long long lhs, long long rhs,
                            Vertex pendant) {
      pr.claim.push_back(ClaimViolation{
          kind, lhs, rhs, pendant, removed,
          to_text(mask_to_hypergraph(sp, mask))});
    };
    const BoundParams bp = BoundParams::of(n, ell, k);
    const long long sum_cap = distance_sum_bound(bp, k);
    const long long ecc_cap = eccentricity_bound(bp, k);
    long long best_sum = -1;
    for (std::uint64_t iso = isolated; iso; iso &= iso - 1) {
      const Vertex pendant = std::countr_zero(iso) + 1;
      bfs_layer_masks(sc.sel, iso & (~iso + 1), sc.layers);
      sc.layer_core.clear();
      long long sum = 0;
      int ecc = 0;
      for (std::size_t d = 1; d < sc.layers.size(); ++d) {
        const long long c = std::popcount(sc.layers[d] & core);
        sc.layer_core.push_back(c);
        if (c > 0) {
          ecc = static_cast<int>(d);
          sum += static_cast<long long>(d) * c;
        }
      }
      if (ecc >= 1 && sc.layer_core[0] < k - ell)
        record("layer_bound", sc.layer_core[0], k - ell, pendant);
      for (int i = 1; i <= ecc - 1; ++i)
        if (sc.layer_core[i - 1] + sc.layer_core[i] < k)
          record("layer_bound", sc.layer_core[i - 1] + sc.layer_core[i], k,
                 pendant);
      if (sum > sum_cap) record("sum_bound", sum, sum_cap, pendant);
      if (ecc > ecc_cap) record("eccentricity_bound", ecc, ecc_cap, pendant);
      best_sum = std::max(best_sum, sum);
    }
    sc.sel_without.clear();
    for (std::size_t i = 0; i < sc.sel.size(); ++i)
      if (i != a) sc.sel_without.push_back(sc.sel[i]);
    long long core_total = 0;
    for (std::uint64_t cm = core; cm; cm &= cm - 1)
      core_total += bfs_sum(sc.sel_without, cm & (~cm + 1)).second;
    const long long rhs = core_total / 2 + choose2(ell) + ell * best_sum;
    if (w_full > rhs) record("induction_inequality", w_full, rhs, 0);
  }
  if (!any_good)
    pr.lemma.push_back(LemmaViolation{to_text(mask_to_hypergraph(sp, mask))});
}

inline void process_candidate(const CandidateSpace& sp, std::uint64_t mask,
                              SweepScratch& sc, SweepPartial& pr) {
  ++pr.scanned;
  sc.sel.clear();
  sc.sel_idx.clear();
  for (std::uint64_t m = mask; m; m &= m - 1) {
    const int j = std::countr_zero(m);
    sc.sel.push_back(sp.vsets[j]);
    sc.sel_idx.push_back(j);
  }
  const auto [reached, first_sum] = bfs_sum(sc.sel, 1ull);
  if (reached != sp.full_mask) return;  // disconnected
  ++pr.connected;
  long long total = first_sum;
  for (int v = 1; v < sp.n; ++v) total += bfs_sum(sc.sel, 1ull << v).second;
  const long long w = total / 2;
  if (w > pr.max_wiener) {
    pr.max_wiener = w;
    pr.maximizer_masks.assign(1, mask);
  } else if (w == pr.max_wiener) {
    pr.maximizer_masks.push_back(mask);
  }
  // Edge-minimal instances carry at most n-k+1 edges: in a connectivity
  // order every edge past the first must introduce a new vertex, else it is
  // removable.
  const int edge_count = static_cast<int>(sc.sel.size());
  if (edge_count == 0 || edge_count > sp.n - sp.k + 1) return;
  for (std::size_t a = 0; a < sc.sel.size(); ++a)
    if (closure_connected_skipping(sc.sel, a, sp.full_mask)) return;
  ++pr.edge_minimal;
  check_lemma_and_claim(sp, mask, w, sc, pr);
}

inline void run_range(const CandidateSpace& sp, unsigned long long lo,
                      unsigned long long hi, SweepPartial& out) {
  if (lo >= hi) return;
  SweepScratch sc;
  Cursor cur(sp, lo);
  for (unsigned long long i = lo; i < hi; ++i) {
    process_candidate(sp, cur.mask, sc, out);
    cur.advance();
  }
}

}  // namespace detail

inline SearchSpace plan_search(int n, int k, SearchLimit limit = {}) {
  const auto sp = detail::plan_candidates(n, k, limit);
  return SearchSpace{sp.n, sp.k, sp.universe, sp.total, sp.max_edges};
}

/// Calls f(const Hypergraph&) for every labeled connected k-uniform
/// hypergraph on [1,n] within the search space, each exactly once, in the
/// deterministic candidate order.
template <class F>
inline void for_each_connected(int n, int k, SearchLimit limit, F&& f) {
  const auto sp = detail::plan_candidates(n, k, limit);
  detail::Cursor cur(sp, 0);
  std::vector<std::uint64_t> sel;
  for (unsigned long long i = 0; i < sp.total; ++i, cur.advance()) {
    sel.clear();
    for (std::uint64_t m = cur.mask; m; m &= m - 1)
      sel.push_back(sp.vsets[std::countr_zero(m)]);
    if (detail::bfs_sum(sel, 1ull).first == sp.full_mask)
      f(detail::mask_to_hypergraph(sp, cur.mask));
  }
}

/// Materialized variant of for_each_connected; intended for small spaces.
inline std::vector<Hypergraph> enumerate_connected(int n, int k,
                                                   SearchLimit limit = {}) {
  std::vector<Hypergraph> out;
  for_each_connected(n, k, limit, [&](const Hypergraph& h) { out.push_back(h); });
  return out;
}

struct VerificationReport {
  int n = 0;
  int k = 0;
  SearchSpace space;
  unsigned long long instances_checked = 0;    // connected candidates
  unsigned long long edge_minimal_checked = 0;
  long long max_wiener = -1;
  long long formula_max = 0;
  unsigned long long labeled_maximizers = 0;
  std::vector<CanonicalForm> maximizer_classes;
  bool theorem_match = false;
  std::vector<ClaimViolation> claim_violations;
  std::vector<LemmaViolation> lemma_violations;

  bool passed() const {
    return theorem_match && claim_violations.empty() &&
           lemma_violations.empty();
  }

  std::string to_text() const;
};

namespace detail {

inline std::string inline_hypergraph(const std::string& file_text) {
  std::string out;
  for (char c : file_text) {
    if (c == '\n') {
      if (!out.empty()) out += "; ";
    } else {
      out += c;
    }
  }
  if (out.size() >= 2 && out.compare(out.size() - 2, 2, "; ") == 0)
    out.erase(out.size() - 2);
  return out;
}

inline std::string edge_to_string(const Edge& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(e[i]);
  }
  return out;
}

}  // namespace detail

inline std::string VerificationReport::to_text() const {
  std::string out;
  out += "n: " + std::to_string(n) + "\n";
  out += "k: " + std::to_string(k) + "\n";
  out +=
      "interpretation: extremal uniqueness read up to vertex relabeling "
      "(canonical forms)\n";
  out += "search_space: " + space.describe() + "\n";
  if (space.max_edges)
    out +=
        "note: the maximum is exact only if every edge-minimal hypergraph "
        "fits the edge bound; uniqueness is certified only within the "
        "bounded space\n";
  out += "instances_checked: " + std::to_string(instances_checked) + "\n";
  out += "edge_minimal_checked: " + std::to_string(edge_minimal_checked) + "\n";
  out += "max_wiener: " + std::to_string(max_wiener) + "\n";
  out += "formula_max: " + std::to_string(formula_max) + "\n";
  out += "labeled_maximizers: " + std::to_string(labeled_maximizers) + "\n";
  out += "maximizer_classes: " + std::to_string(maximizer_classes.size()) + "\n";
  for (std::size_t i = 0; i < maximizer_classes.size(); ++i) {
    const CanonicalForm& c = maximizer_classes[i];
    out += "maximizer_class " + std::to_string(i + 1) + ":\n";
    out += hgwiener::to_text(Hypergraph(c.n, c.k, c.edges));
  }
  out += std::string("theorem_match: ") + (theorem_match ? "true" : "false") +
         "\n";
  out += "claim_violations: " + std::to_string(claim_violations.size()) + "\n";
  for (std::size_t i = 0; i < claim_violations.size(); ++i) {
    const ClaimViolation& v = claim_violations[i];
    out += "claim_violation " + std::to_string(i + 1) + ": kind=" + v.kind +
           " pendant=" + std::to_string(v.pendant) +
           " lhs=" + std::to_string(v.lhs) + " rhs=" + std::to_string(v.rhs) +
           " removed=" + detail::edge_to_string(v.removed) +
           " hypergraph=" + detail::inline_hypergraph(v.hypergraph) + "\n";
  }
  out += "lemma_violations: " + std::to_string(lemma_violations.size()) + "\n";
  for (std::size_t i = 0; i < lemma_violations.size(); ++i)
    out += "lemma_violation " + std::to_string(i + 1) +
           ": hypergraph=" + detail::inline_hypergraph(lemma_violations[i].hypergraph) +
           "\n";
  return out;
}

/// Sweeps the search space once and verifies everything at once: the
/// maximum Wiener index and its maximizer classes against the closed form
/// and the generated extremal paths, the pendant bounds on every good edge
/// of every edge-minimal instance, and good-edge existence. Workers process
/// contiguous candidate ranges and partial results merge in a fixed order,
/// so the report does not depend on the job count.
inline VerificationReport run_verification(int n, int k, SearchLimit limit = {},
                                           int jobs = 1) {
  if (jobs < 1) throw domain_error("jobs must be at least 1");
  if (n > 10)
    throw search_space_error(
        "verification relies on canonical forms and is limited to n <= 10");
  const auto sp = detail::plan_candidates(n, k, limit);
  const int workers = static_cast<int>(std::min<unsigned long long>(
      static_cast<unsigned long long>(jobs),
      std::max<unsigned long long>(1, sp.total)));
  std::vector<detail::SweepPartial> partials(workers);
  if (workers == 1) {
    detail::run_range(sp, 0, sp.total, partials[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const unsigned long long lo = sp.total * w / workers;
      const unsigned long long hi = sp.total * (w + 1) / workers;
      threads.emplace_back([&sp, lo, hi, &partials, w] {
        detail::run_range(sp, lo, hi, partials[w]);
      });
    }
    for (auto& t : threads) t.join();
  }
  detail::SweepPartial merged;
  for (auto& p : partials) detail::merge_into(merged, std::move(p));

  VerificationReport rep;
  rep.n = n;
  rep.k = k;
  rep.space = SearchSpace{sp.n, sp.k, sp.universe, sp.total, sp.max_edges};
  rep.instances_checked = merged.connected;
  rep.edge_minimal_checked = merged.edge_minimal;
  rep.max_wiener = merged.max_wiener;
  rep.formula_max = max_wiener(n, k);
  rep.labeled_maximizers = merged.maximizer_masks.size();
  std::vector<CanonicalForm> classes;
  classes.reserve(merged.maximizer_masks.size());
  for (std::uint64_t mask : merged.maximizer_masks)
    classes.push_back(canonical_form(detail::mask_to_hypergraph(sp, mask)));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  rep.maximizer_classes = std::move(classes);

  std::vector<CanonicalForm> expected;
  bool offsets_attain = true;
  if (n % k != 0) {
    expected.push_back(canonical_form(tight_path(n, k)));
  } else {
    for (int x = 1; x < k; ++x) {
      const Hypergraph path = offset_tight_path(n, k, x);
      expected.push_back(canonical_form(path));
      if (wiener(path) != rep.max_wiener) offsets_attain = false;
    }
  }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  rep.theorem_match = rep.max_wiener == rep.formula_max &&
                      rep.maximizer_classes == expected && offsets_attain;
  rep.claim_violations = std::move(merged.claim);
  rep.lemma_violations = std::move(merged.lemma);
  return rep;
}

inline VerificationReport verify_theorem(int n, int k, SearchLimit limit = {},
                                         int jobs = 1) {
  return run_verification(n, k, limit, jobs);
}

inline std::vector<ClaimViolation> verify_claim(int n, int k,
                                                SearchLimit limit = {},
                                                int jobs = 1) {
  return run_verification(n, k, limit, jobs).claim_violations;
}

inline std::vector<LemmaViolation> verify_lemma(int n, int k,
                                                SearchLimit limit = {},
                                                int jobs = 1) {
  return run_verification(n, k, limit, jobs).lemma_violations;
}

}  // namespace hgwiener
