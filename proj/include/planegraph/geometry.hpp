#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planegraph {

/// Largest admissible absolute coordinate. With |x|,|y| <= 2^20 every
/// orientation determinant is bounded by 2^44 and is exact in int64_t.
inline constexpr std::int64_t kCoordinateCap = std::int64_t{1} << 20;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  int label = 0;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

const char* to_string(Orientation o);

/// Raised for malformed or degenerate input (duplicates, collinear triples,
/// coordinates out of range, bad .pts text).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign of (b - a) x (c - a).
Orientation orientation(const Point& a, const Point& b, const Point& c);

/// True iff the open segments ab and cd share an interior point. Segments
/// that share an endpoint never cross. Throws ValidationError if a collinear
/// triple among the four points would make the answer depend on tolerance.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

struct Triple {
  int a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct GeneralPositionReport {
  std::vector<std::pair<int, int>> duplicates;
  std::vector<Triple> collinear;
  std::vector<int> out_of_range;

  bool ok() const { return duplicates.empty() && collinear.empty() && out_of_range.empty(); }
  std::string describe() const;
};

/// Checks every pair for duplicates and every triple for collinearity.
/// Triples containing a duplicated pair are not reported as collinear.
GeneralPositionReport validate_general_position(const std::vector<Point>& points);

/// A labeled point set in general position. Only constructible through
/// validation, so every PointSet downstream satisfies the invariants.
class PointSet {
 public:
  PointSet() = default;

  /// Relabels points 0..n-1 in the given order and validates.
  static PointSet from_coordinates(const std::vector<std::pair<std::int64_t, std::int64_t>>& xy);
  static PointSet from_points(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Same set with point `label` removed; remaining points are relabeled in order.
  PointSet without(int label) const;

 private:
  explicit PointSet(std::vector<Point> pts) : points_(std::move(pts)) {}
  std::vector<Point> points_;
};

/// Hull vertex labels in counter-clockwise order, starting at the smallest label.
std::vector<int> convex_hull(const PointSet& points);

bool is_triangular_hull(const PointSet& points);

// .pts text format: "n" on the first line, then n lines "x y".
/// Parses without the general-position check (labels in line order).
std::vector<Point> parse_pts_points(std::string_view text);
PointSet parse_pts(std::string_view text);
std::string read_text_file(const std::string& path);
PointSet read_pts_file(const std::string& path);
std::string format_pts(const PointSet& points);
void write_pts_file(const std::string& path, const PointSet& points);

}  // namespace planegraph

namespace planegraph {

/// 64-bit FNV-1a of the canonical .pts text, as 16 hex digits.
std::string fingerprint(const PointSet& points);

}  // namespace planegraph
