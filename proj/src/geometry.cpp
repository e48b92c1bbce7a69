#include "planegraph/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace planegraph {

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::CW: return "CW";
    case Orientation::Collinear: return "COLLINEAR";
    case Orientation::CCW: return "CCW";
  }
  return "?";
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const std::int64_t det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (det > 0) return Orientation::CCW;
  if (det < 0) return Orientation::CW;
  return Orientation::Collinear;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;
  const Orientation abc = orientation(a, b, c);
  const Orientation abd = orientation(a, b, d);
  const Orientation cda = orientation(c, d, a);
  const Orientation cdb = orientation(c, d, b);
  if (abc == Orientation::Collinear || abd == Orientation::Collinear ||
      cda == Orientation::Collinear || cdb == Orientation::Collinear) {
    throw ValidationError("segments_cross: collinear triple among segment endpoints");
  }
  return abc != abd && cda != cdb;
}

std::string GeneralPositionReport::describe() const {
  std::ostringstream os;
  for (const auto& [i, j] : duplicates) os << "duplicate points " << i << " and " << j << "\n";
  for (const auto& t : collinear) os << "collinear triple (" << t.a << "," << t.b << "," << t.c << ")\n";
  for (int i : out_of_range) os << "point " << i << " exceeds coordinate cap 2^20\n";
  return os.str();
}

GeneralPositionReport validate_general_position(const std::vector<Point>& points) {
  GeneralPositionReport report;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    if (p.x > kCoordinateCap || p.x < -kCoordinateCap || p.y > kCoordinateCap || p.y < -kCoordinateCap) {
      report.out_of_range.push_back(i);
    }
  }
  // Determinants are only exact inside the cap.
  if (!report.out_of_range.empty()) return report;

  auto at = [&](int i) -> const Point& { return points[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i) == at(j)) report.duplicates.emplace_back(i, j);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (at(i) == at(j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (at(i) == at(k) || at(j) == at(k)) continue;
        if (orientation(at(i), at(j), at(k)) == Orientation::Collinear) report.collinear.push_back({i, j, k});
      }
    }
  return report;
}

PointSet PointSet::from_points(std::vector<Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) points[i].label = static_cast<int>(i);
  const auto report = validate_general_position(points);
  if (!report.ok()) throw ValidationError("point set not in general position:\n" + report.describe());
  return PointSet(std::move(points));
}

PointSet PointSet::from_coordinates(const std::vector<std::pair<std::int64_t, std::int64_t>>& xy) {
  std::vector<Point> pts;
  pts.reserve(xy.size());
  for (const auto& [x, y] : xy) pts.push_back({x, y, 0});
  return from_points(std::move(pts));
}

PointSet PointSet::without(int label) const {
  if (label < 0 || label >= size()) throw std::out_of_range("PointSet::without: bad label");
  std::vector<Point> rest;
  rest.reserve(points_.size() - 1);
  for (const auto& p : points_)
    if (p.label != label) rest.push_back(p);
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i].label = static_cast<int>(i);
  return PointSet(std::move(rest));
}

std::vector<int> convex_hull(const PointSet& points) {
  const int n = points.size();
  if (n < 3) throw ValidationError("convex_hull: need at least 3 points");

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return points[a].x != points[b].x ? points[a].x < points[b].x : points[a].y < points[b].y;
  });

  // Andrew's monotone chain; no collinear triples, so strict turns only.
  std::vector<int> hull(2 * static_cast<std::size_t>(n));
  std::size_t k = 0;
  for (int idx : order) {
    while (k >= 2 && orientation(points[hull[k - 2]], points[hull[k - 1]], points[idx]) != Orientation::CCW) --k;
    hull[k++] = idx;
  }
  for (std::size_t i = order.size() - 1, lower = k + 1; i-- > 0;) {
    const int idx = order[i];
    while (k >= lower && orientation(points[hull[k - 2]], points[hull[k - 1]], points[idx]) != Orientation::CCW) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);

  std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());
  return hull;
}

bool is_triangular_hull(const PointSet& points) {
  return points.size() >= 3 && convex_hull(points).size() == 3;
}

namespace {

std::int64_t parse_int(std::string_view tok, int line) {
  std::int64_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ValidationError(".pts line " + std::to_string(line) + ": malformed integer '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::vector<Point> parse_pts_points(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(start, end - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ValidationError(".pts: empty input");

  const auto header = split_ws(lines[0]);
  if (header.size() != 1) throw ValidationError(".pts line 1: expected point count");
  const std::int64_t n = parse_int(header[0], 1);
  if (n < 0) throw ValidationError(".pts line 1: negative point count");
  if (static_cast<std::int64_t>(lines.size()) - 1 != n) {
    throw ValidationError(".pts: header says " + std::to_string(n) + " points, found " +
                          std::to_string(lines.size() - 1) + " coordinate lines");
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> xy;
  xy.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = split_ws(lines[i]);
    const int line_no = static_cast<int>(i) + 1;
    if (toks.size() != 2) throw ValidationError(".pts line " + std::to_string(line_no) + ": expected 'x y'");
    xy.emplace_back(parse_int(toks[0], line_no), parse_int(toks[1], line_no));
  }
  std::vector<Point> pts;
  for (const auto& [x, y] : xy) pts.push_back({x, y, static_cast<int>(pts.size())});
  return pts;
}

PointSet parse_pts(std::string_view text) { return PointSet::from_points(parse_pts_points(text)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PointSet read_pts_file(const std::string& path) { return parse_pts(read_text_file(path)); }

std::string format_pts(const PointSet& points) {
  std::ostringstream os;
  os << points.size() << '\n';
  for (const auto& p : points) os << p.x << ' ' << p.y << '\n';
  return os.str();
}

void write_pts_file(const std::string& path, const PointSet& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_pts(points);
}

}  // namespace planegraph

namespace planegraph {

std::string fingerprint(const PointSet& points) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_pts(points)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

}  // namespace planegraph
