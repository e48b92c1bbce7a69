#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "planegraph/crossing.hpp"
#include "planegraph/edge_set.hpp"

namespace planegraph {

/// One crossing-free edge subset of a Universe.
struct PlaneGraph {
  EdgeSet edges;
  int n = 0;

  int edge_count() const { return edges.count(); }
  /// Serialized edge bit-vector; bit k is segment k of the lexicographic table.
  std::string to_hex() const { return edges.to_hex(n * (n - 1) / 2); }
  static PlaneGraph from_hex(std::string_view hex, int n) { return {EdgeSet::from_hex(hex), n}; }
  friend bool operator==(const PlaneGraph&, const PlaneGraph&) = default;
};

using Degrees = std::array<std::uint8_t, kMaxSupportedPoints>;

int degree(const Universe& u, const EdgeSet& edges, int p);
Degrees degrees(const Universe& u, const EdgeSet& edges);
/// True iff no two edges of `edges` cross.
bool is_plane(const Universe& u, const EdgeSet& edges);

inline constexpr int kDefaultMaxPoints = 12;

/// Raised when a run would exceed the configured point-count cap.
class CapExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct EnumerationLimits {
  int max_n = kDefaultMaxPoints;
  bool force = false;

  /// Default cap, honoring PLANEGRAPH_MAX_N when set.
  static EnumerationLimits from_environment();
};

/// Throws CapExceeded (with a work estimate) if n is over the cap and not forced.
void check_cap(int n, const EnumerationLimits& limits);

/// Rough bracket of pg for an n-point set: 11.65^n (convex position) to 23.32^n.
std::string work_estimate(int n);

struct RunOptions {
  int workers = 1;
  /// Number of leading segment indices whose in/out pattern defines a subtree.
  int prefix_bits = 8;
  EnumerationLimits limits{};
};

namespace detail {

template <class Leaf>
void scan(const Universe& u, const EdgeSet& universe_mask, int from, EdgeSet chosen, EdgeSet forbidden,
          Degrees& deg, Leaf& leaf) {
  const int c = (universe_mask & ~forbidden).next(from);
  if (c < 0) {
    leaf(chosen, deg);
    return;
  }
  scan(u, universe_mask, c + 1, chosen, forbidden, deg, leaf);
  const auto [a, b] = u.segments()[c];
  ++deg[static_cast<std::size_t>(a)];
  ++deg[static_cast<std::size_t>(b)];
  scan(u, universe_mask, c + 1, chosen.with(c), forbidden | u.crossings()[c], deg, leaf);
  --deg[static_cast<std::size_t>(a)];
  --deg[static_cast<std::size_t>(b)];
}

}  // namespace detail

/// Number of independent subtrees for the given prefix length.
std::uint64_t subtree_count(const Universe& u, int prefix_bits);

/// Enumerates the plane graphs whose first min(prefix_bits, m) segments
/// follow the in/out pattern encoded by `subtree` (bit t = segment t chosen).
/// Subtrees with a crossing prefix are empty. Leaf receives (edges, degrees).
template <class Leaf>
void for_each_in_subtree(const Universe& u, int prefix_bits, std::uint64_t subtree, Leaf&& leaf) {
  const int m = u.segment_count();
  const int k = std::min(prefix_bits, m);
  EdgeSet chosen;
  EdgeSet forbidden;
  Degrees deg{};
  for (int t = 0; t < k; ++t) {
    if (!((subtree >> t) & 1U)) continue;
    if (forbidden.test(t)) return;
    chosen.set(t);
    forbidden |= u.crossings()[t];
    const auto [a, b] = u.segments()[t];
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  // Prefix indices are decided; mask them out of the remaining search.
  const EdgeSet mask = EdgeSet::prefix(m) & ~EdgeSet::prefix(k);
  detail::scan(u, mask, k, chosen, forbidden, deg, leaf);
}

/// Single-threaded scan in deterministic order (empty graph first).
template <class Leaf>
void for_each_plane_graph(const Universe& u, Leaf&& leaf) {
  Degrees deg{};
  detail::scan(u, EdgeSet::prefix(u.segment_count()), 0, EdgeSet{}, EdgeSet{}, deg, leaf);
}

/// Runs one State per worker over a static round-robin split of the
/// subtrees and returns the states in worker order. States are merged by
/// the caller; results must not depend on the split.
template <class State, class Leaf>
std::vector<State> run_partitioned(const Universe& u, const RunOptions& opts, Leaf leaf) {
  const int workers = std::max(1, opts.workers);
  const int k = std::clamp(opts.prefix_bits, 0, std::min(u.segment_count(), 24));
  const std::uint64_t subtrees = std::uint64_t{1} << k;
  std::vector<State> states(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    State& st = states[static_cast<std::size_t>(w)];
    for (std::uint64_t s = static_cast<std::uint64_t>(w); s < subtrees; s += static_cast<std::uint64_t>(workers)) {
      for_each_in_subtree(u, k, s, [&](const EdgeSet& e, const Degrees& d) { leaf(st, e, d); });
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  return states;
}

/// Visits every plane graph once, the empty graph included. Returns the visit count.
mpz_class enumerate_plane_graphs(const Universe& u, const std::function<void(const PlaneGraph&)>& visitor,
                                 const EnumerationLimits& limits = {});

/// pg(P): number of plane graphs.
mpz_class count_plane_graphs(const Universe& u, const RunOptions& opts = {});

/// Test oracle: walks all 2^m subsets and rejects those with a crossing
/// pair, using the geometric predicate directly. Requires m <= 22.
mpz_class count_plane_graphs_bruteforce(const PointSet& points);

struct DegreeExpectation {
  mpz_class pg;
  /// ving_counts[i] = sum over all plane graphs of the number of degree-i vertices.
  std::vector<mpz_class> ving_counts;
  /// Sum of edge counts over all plane graphs.
  mpz_class total_edges;

  int n() const { return static_cast<int>(ving_counts.size()); }
  /// Expected number of degree-i vertices; zero for i >= n.
  mpq_class vhat(int i) const;
};

DegreeExpectation expected_degree_vector(const Universe& u, const RunOptions& opts = {});

bool is_triangulation(const Universe& u, const EdgeSet& edges);
/// Edge count of every triangulation: 3n - 3 - h for n >= 3.
int triangulation_edge_count(const Universe& u);

/// Adds the lowest-indexed addable segment until none remains.
PlaneGraph containing_triangulation(const Universe& u, const PlaneGraph& g);

struct TriangulationRecord {
  EdgeSet edges;
  /// histogram[d] = number of vertices of degree d.
  std::vector<int> histogram;
  int v3 = 0;
  int v4 = 0;
  int hull_degree3 = 0;
};

struct TriangulationStats {
  mpz_class count;
  std::vector<TriangulationRecord> records;
};

/// Visits exactly the maximal plane graphs. Uses a pruned scan: a skipped
/// segment must stay blockable by some later segment.
TriangulationStats enumerate_triangulations(const Universe& u,
                                            const std::function<void(const TriangulationRecord&)>& visitor = {},
                                            const EnumerationLimits& limits = {});

/// Converts an unsigned 128-bit accumulator into a GMP integer.
mpz_class to_mpz(unsigned __int128 v);

}  // namespace planegraph
