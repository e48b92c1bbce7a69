#pragma once

#include <utility>
#include <vector>

#include "planegraph/edge_set.hpp"
#include "planegraph/geometry.hpp"

namespace planegraph {

/// Largest n whose segment universe fits in an EdgeSet.
inline constexpr int kMaxSupportedPoints = 16;

/// All C(n,2) candidate segments (i, j), i < j, indexed lexicographically.
class SegmentTable {
 public:
  explicit SegmentTable(const PointSet& points);

  int point_count() const { return n_; }
  int size() const { return static_cast<int>(segments_.size()); }
  const std::pair<int, int>& operator[](int k) const { return segments_[static_cast<std::size_t>(k)]; }
  const std::vector<std::pair<int, int>>& segments() const { return segments_; }

  /// Index of the segment joining i and j (either order).
  int index_of(int i, int j) const;

  const EdgeSet& hull_edges() const { return hull_edges_; }
  /// Segments with p as an endpoint.
  const EdgeSet& incident(int p) const { return incident_[static_cast<std::size_t>(p)]; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> segments_;
  EdgeSet hull_edges_;
  std::vector<EdgeSet> incident_;
};

/// cross(k): segments properly crossing segment k.
class CrossingSets {
 public:
  CrossingSets(const PointSet& points, const SegmentTable& table);

  const EdgeSet& operator[](int k) const { return cross_[static_cast<std::size_t>(k)]; }
  int size() const { return static_cast<int>(cross_.size()); }
  /// Number of unordered crossing pairs.
  long pair_count() const;

 private:
  std::vector<EdgeSet> cross_;
};

/// A validated point set together with its segment table, crossing sets and
/// hull. Immutable; every enumeration works over one of these.
class Universe {
 public:
  explicit Universe(PointSet points);

  const PointSet& points() const { return points_; }
  int n() const { return points_.size(); }
  const SegmentTable& segments() const { return table_; }
  const CrossingSets& crossings() const { return cross_; }
  int segment_count() const { return table_.size(); }
  /// CCW hull labels; empty when n < 3.
  const std::vector<int>& hull() const { return hull_; }
  bool is_hull_point(int p) const { return hull_flags_[static_cast<std::size_t>(p)]; }
  int hull_size() const;

  /// Segments from p that neither lie in `edges` nor cross any of its edges,
  /// excluding the ones already incident to p.
  EdgeSet visible_segments(const EdgeSet& edges, int p) const;

 private:
  PointSet points_;
  SegmentTable table_;
  CrossingSets cross_;
  std::vector<int> hull_;
  std::vector<bool> hull_flags_;
};

}  // namespace planegraph
