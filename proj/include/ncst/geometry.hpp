#pragma once

// Exact planar predicates over bounded integer coordinates.
//
// Every determinant evaluated here is a difference of products of coordinate
// differences. With |x|, |y| <= 10^6 each difference is bounded by 2*10^6, so
// a 2x2 determinant stays below 8*10^12 and fits in std::int64_t with room to
// spare. Nothing in this header uses floating point.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncst {

inline constexpr std::int64_t kCoordinateBound = 1'000'000;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Three-valued orientation result: -1 clockwise, 0 collinear, +1 counterclockwise.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr bool in_coordinate_range(const Point& p) {
  return p.x >= -kCoordinateBound && p.x <= kCoordinateBound && p.y >= -kCoordinateBound &&
         p.y <= kCoordinateBound;
}

constexpr std::int64_t cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

constexpr std::int64_t dot(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.x - p.x) + (q.y - p.y) * (r.y - p.y);
}

constexpr Sign sign_of(std::int64_t v) {
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
}

/// Sign of (q - p) x (r - p).
constexpr Sign orient(const Point& p, const Point& q, const Point& r) { return sign_of(cross(p, q, r)); }

/// Side of p relative to the directed line through a and b; +1 is the CCW (left) side.
inline Sign side_of_line(const Point& a, const Point& b, const Point& p) {
  if (a == b) throw GeometryError("side_of_line: degenerate line, a == b");
  return orient(a, b, p);
}

/// Open segments (a,b) and (c,d) properly intersect. Segments that only share an
/// endpoint never cross under general position.
constexpr bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = to_int(orient(a, b, c));
  const int o2 = to_int(orient(a, b, d));
  const int o3 = to_int(orient(c, d, a));
  const int o4 = to_int(orient(c, d, b));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

/// The infinite line l(a,b) meets the open segment (c,d). Endpoints of [c,d]
/// lying on the line do not count.
inline bool line_meets_open_segment(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == b) throw GeometryError("line_meets_open_segment: degenerate line, a == b");
  return to_int(orient(a, b, c)) * to_int(orient(a, b, d)) < 0;
}

struct GeneralPositionViolation {
  enum class Kind { Duplicate, Collinear, OutOfRange };
  Kind kind = Kind::Duplicate;
  /// Offending input indices: one for OutOfRange, two for Duplicate, three for Collinear.
  std::vector<std::size_t> indices;

  std::string describe(std::span<const Point> points) const {
    auto fmt = [&](std::size_t i) {
      return "points[" + std::to_string(i) + "]=(" + std::to_string(points[i].x) + "," +
             std::to_string(points[i].y) + ")";
    };
    std::string s;
    switch (kind) {
      case Kind::OutOfRange:
        return fmt(indices[0]) + " exceeds the coordinate bound " + std::to_string(kCoordinateBound);
      case Kind::Duplicate:
        return "duplicate points " + fmt(indices[0]) + " and " + fmt(indices[1]);
      case Kind::Collinear:
        return "collinear triple " + fmt(indices[0]) + ", " + fmt(indices[1]) + ", " + fmt(indices[2]);
    }
    return s;
  }
};

/// Reports the first out-of-range point, duplicate pair or collinear triple in
/// index order, or nullopt when the set is in general position.
inline std::optional<GeneralPositionViolation> assert_general_position(std::span<const Point> points) {
  using Kind = GeneralPositionViolation::Kind;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_coordinate_range(points[i])) return GeneralPositionViolation{Kind::OutOfRange, {i}};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) return GeneralPositionViolation{Kind::Duplicate, {i, j}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(points[i], points[j], points[k]) == Sign::Zero) {
          return GeneralPositionViolation{Kind::Collinear, {i, j, k}};
        }
      }
    }
  }
  return std::nullopt;
}

/// Hull vertex indices in CCW order starting at the lexicographically smallest
/// point (monotone chain). Requires at least three distinct points, no three collinear.
inline std::vector<std::size_t> convex_hull_ccw(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) throw GeometryError("convex_hull_ccw: need at least 3 points");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (points[order[i]] == points[order[i - 1]]) throw GeometryError("convex_hull_ccw: duplicate points");
  }

  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  auto push = [&](std::size_t idx, std::size_t floor) {
    while (k >= floor) {
      const Sign s = orient(points[hull[k - 2]], points[hull[k - 1]], points[idx]);
      if (s == Sign::Zero) throw GeometryError("convex_hull_ccw: collinear points on the hull");
      if (s == Sign::Positive) break;
      --k;
    }
    hull[k++] = idx;
  };
  for (std::size_t i = 0; i < n; ++i) push(order[i], 2);
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) push(order[i], lower);
  hull.resize(k - 1);
  if (hull.size() < 3) throw GeometryError("convex_hull_ccw: degenerate point set");
  return hull;
}

}  // namespace ncst
