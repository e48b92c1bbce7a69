#include "planegraph/crossing.hpp"

#include <stdexcept>
#include <string>

namespace planegraph {

SegmentTable::SegmentTable(const PointSet& points) : n_(points.size()) {
  if (n_ > kMaxSupportedPoints) {
    throw ValidationError("at most " + std::to_string(kMaxSupportedPoints) + " points are supported, got " +
                          std::to_string(n_));
  }
  incident_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const int k = size();
      segments_.emplace_back(i, j);
      incident_[static_cast<std::size_t>(i)].set(k);
      incident_[static_cast<std::size_t>(j)].set(k);
    }
  if (n_ >= 3) {
    const auto hull = convex_hull(points);
    for (std::size_t t = 0; t < hull.size(); ++t) hull_edges_.set(index_of(hull[t], hull[(t + 1) % hull.size()]));
  } else if (n_ == 2) {
    hull_edges_.set(0);
  }
}

int SegmentTable::index_of(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("SegmentTable::index_of");
  if (i > j) std::swap(i, j);
  // Rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) segments.
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

CrossingSets::CrossingSets(const PointSet& points, const SegmentTable& table)
    : cross_(static_cast<std::size_t>(table.size())) {
  const int m = table.size();
  for (int k = 0; k < m; ++k) {
    const auto [a, b] = table[k];
    for (int l = k + 1; l < m; ++l) {
      const auto [c, d] = table[l];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_cross(points[a], points[b], points[c], points[d])) {
        cross_[static_cast<std::size_t>(k)].set(l);
        cross_[static_cast<std::size_t>(l)].set(k);
      }
    }
  }
}

long CrossingSets::pair_count() const {
  long total = 0;
  for (const auto& c : cross_) total += c.count();
  return total / 2;
}

Universe::Universe(PointSet points)
    : points_(std::move(points)), table_(points_), cross_(points_, table_), hull_flags_(static_cast<std::size_t>(n()), false) {
  if (n() >= 3) {
    hull_ = convex_hull(points_);
  } else {
    for (int i = 0; i < n(); ++i) hull_.push_back(i);
  }
  for (int p : hull_) hull_flags_[static_cast<std::size_t>(p)] = true;
}

int Universe::hull_size() const { return static_cast<int>(hull_.size()); }

EdgeSet Universe::visible_segments(const EdgeSet& edges, int p) const {
  EdgeSet visible;
  const EdgeSet candidates = table_.incident(p) & ~edges;
  candidates.for_each([&](int k) {
    if (!cross_[k].intersects(edges)) visible.set(k);
  });
  return visible;
}

}  // namespace planegraph
