#include "planegraph/enumerate.hpp"

#include "planegraph/dyadic.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace planegraph {

mpz_class to_mpz(unsigned __int128 v) {
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

int degree(const Universe& u, const EdgeSet& edges, int p) { return (edges & u.segments().incident(p)).count(); }

Degrees degrees(const Universe& u, const EdgeSet& edges) {
  Degrees d{};
  edges.for_each([&](int k) {
    const auto [a, b] = u.segments()[k];
    ++d[static_cast<std::size_t>(a)];
    ++d[static_cast<std::size_t>(b)];
  });
  return d;
}

bool is_plane(const Universe& u, const EdgeSet& edges) {
  if (!EdgeSet::prefix(u.segment_count()).contains(edges)) return false;
  bool ok = true;
  edges.for_each([&](int k) { ok = ok && !u.crossings()[k].intersects(edges); });
  return ok;
}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("PLANEGRAPH_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_n = static_cast<int>(v);
  }
  return limits;
}

std::string work_estimate(int n) {
  std::ostringstream os;
  os.precision(3);
  os << "work estimate for n=" << n << ": between " << std::pow(11.65, n) << " and " << std::pow(23.32, n)
     << " plane graphs";
  return os.str();
}

void check_cap(int n, const EnumerationLimits& limits) {
  if (n > kMaxSupportedPoints) {
    throw CapExceeded("n=" + std::to_string(n) + " exceeds the hard limit of " +
                      std::to_string(kMaxSupportedPoints) + " points; " + work_estimate(n));
  }
  if (n > limits.max_n && !limits.force) {
    throw CapExceeded("n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(limits.max_n) +
                      " (use --force or --max-n); " + work_estimate(n));
  }
}

std::uint64_t subtree_count(const Universe& u, int prefix_bits) {
  return std::uint64_t{1} << std::clamp(prefix_bits, 0, std::min(u.segment_count(), 24));
}

mpz_class enumerate_plane_graphs(const Universe& u, const std::function<void(const PlaneGraph&)>& visitor,
                                 const EnumerationLimits& limits) {
  check_cap(u.n(), limits);
  unsigned __int128 visits = 0;
  for_each_plane_graph(u, [&](const EdgeSet& e, const Degrees&) {
    ++visits;
    if (visitor) visitor(PlaneGraph{e, u.n()});
  });
  return to_mpz(visits);
}

mpz_class count_plane_graphs(const Universe& u, const RunOptions& opts) {
  check_cap(u.n(), opts.limits);
  struct State {
    unsigned __int128 count = 0;
  };
  const auto states =
      run_partitioned<State>(u, opts, [](State& st, const EdgeSet&, const Degrees&) { ++st.count; });
  mpz_class total = 0;
  for (const auto& st : states) total += to_mpz(st.count);
  return total;
}

mpz_class count_plane_graphs_bruteforce(const PointSet& points) {
  const int n = points.size();
  const int m = n * (n - 1) / 2;
  if (m > 22) throw CapExceeded("brute-force oracle limited to 22 segments, got " + std::to_string(m));

  std::vector<std::pair<int, int>> segs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) segs.emplace_back(i, j);
  std::vector<std::uint32_t> conflicts(segs.size(), 0);
  for (std::size_t k = 0; k < segs.size(); ++k)
    for (std::size_t l = 0; l < segs.size(); ++l) {
      const auto [a, b] = segs[k];
      const auto [c, d] = segs[l];
      if (k != l && segments_cross(points[a], points[b], points[c], points[d])) conflicts[k] |= 1U << l;
    }

  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    bool plane = true;
    for (int k = 0; k < m && plane; ++k)
      if (((mask >> k) & 1U) && (mask & conflicts[static_cast<std::size_t>(k)])) plane = false;
    if (plane) ++count;
  }
  return mpz_class(static_cast<unsigned long>(count));
}

mpq_class DegreeExpectation::vhat(int i) const {
  if (i < 0 || i >= n() || pg == 0) return 0;
  return make_rational(ving_counts[static_cast<std::size_t>(i)], pg);
}

DegreeExpectation expected_degree_vector(const Universe& u, const RunOptions& opts) {
  check_cap(u.n(), opts.limits);
  const int n = u.n();
  struct State {
    unsigned __int128 pg = 0;
    unsigned __int128 edges = 0;
    std::array<unsigned __int128, kMaxSupportedPoints> ving{};
  };
  const auto states = run_partitioned<State>(u, opts, [n](State& st, const EdgeSet& e, const Degrees& d) {
    ++st.pg;
    st.edges += static_cast<unsigned>(e.count());
    for (int p = 0; p < n; ++p) ++st.ving[d[static_cast<std::size_t>(p)]];
  });

  DegreeExpectation out;
  out.ving_counts.assign(static_cast<std::size_t>(n), 0);
  for (const auto& st : states) {
    out.pg += to_mpz(st.pg);
    out.total_edges += to_mpz(st.edges);
    for (int i = 0; i < n; ++i) out.ving_counts[static_cast<std::size_t>(i)] += to_mpz(st.ving[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool is_triangulation(const Universe& u, const EdgeSet& edges) {
  const int m = u.segment_count();
  for (int k = 0; k < m; ++k) {
    if (edges.test(k)) continue;
    if (!u.crossings()[k].intersects(edges)) return false;
  }
  return true;
}

int triangulation_edge_count(const Universe& u) {
  const int n = u.n();
  if (n < 3) return n * (n - 1) / 2;
  return 3 * n - 3 - u.hull_size();
}

PlaneGraph containing_triangulation(const Universe& u, const PlaneGraph& g) {
  // Adding edges only grows the blocked set, so a single ascending pass
  // picks exactly what "repeatedly add the lowest addable segment" would.
  EdgeSet edges = g.edges;
  EdgeSet blocked;
  edges.for_each([&](int k) { blocked |= u.crossings()[k]; });
  for (int k = 0; k < u.segment_count(); ++k) {
    if (edges.test(k) || blocked.test(k)) continue;
    edges.set(k);
    blocked |= u.crossings()[k];
  }
  return {edges, g.n};
}

namespace {

struct TriangulationScan {
  const Universe& u;
  EdgeSet all;
  TriangulationStats& stats;
  const std::function<void(const TriangulationRecord&)>& visitor;
  unsigned __int128 count = 0;

  // Every pending (skipped, unblocked) segment must still cross some
  // available segment with index > pos.
  bool feasible(const EdgeSet& pending, const EdgeSet& forbidden, int pos) const {
    const EdgeSet later = all & ~EdgeSet::prefix(pos + 1) & ~forbidden;
    bool ok = true;
    pending.for_each([&](int k) { ok = ok && u.crossings()[k].intersects(later); });
    return ok;
  }

  void record(const EdgeSet& edges) {
    ++count;
    const Degrees d = degrees(u, edges);
    TriangulationRecord rec;
    rec.edges = edges;
    rec.histogram.assign(static_cast<std::size_t>(std::max(u.n(), 1)), 0);
    for (int p = 0; p < u.n(); ++p) {
      const int dp = d[static_cast<std::size_t>(p)];
      ++rec.histogram[static_cast<std::size_t>(dp)];
      if (dp == 3 && u.is_hull_point(p)) ++rec.hull_degree3;
    }
    rec.v3 = u.n() > 3 ? rec.histogram[3] : 0;
    rec.v4 = u.n() > 4 ? rec.histogram[4] : 0;
    if (visitor) visitor(rec);
    stats.records.push_back(std::move(rec));
  }

  void run(int from, EdgeSet chosen, EdgeSet forbidden, EdgeSet pending) {
    const int c = (all & ~forbidden).next(from);
    if (c < 0) {
      if (pending.none()) record(chosen);
      return;
    }
    if (u.crossings()[c].any()) {
      const EdgeSet skip = pending.with(c);
      if (feasible(skip, forbidden, c)) run(c + 1, chosen, forbidden, skip);
    }
    const EdgeSet take_forbidden = forbidden | u.crossings()[c];
    const EdgeSet take_pending = pending & ~take_forbidden;
    if (feasible(take_pending, take_forbidden, c)) run(c + 1, chosen.with(c), take_forbidden, take_pending);
  }
};

}  // namespace

TriangulationStats enumerate_triangulations(const Universe& u,
                                            const std::function<void(const TriangulationRecord&)>& visitor,
                                            const EnumerationLimits& limits) {
  check_cap(u.n(), limits);
  TriangulationStats stats;
  TriangulationScan scan{u, EdgeSet::prefix(u.segment_count()), stats, visitor};
  scan.run(0, {}, {}, {});
  stats.count = to_mpz(scan.count);
  return stats;
}

}  // namespace planegraph
