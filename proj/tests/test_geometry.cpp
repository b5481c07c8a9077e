#include <gtest/gtest.h>

#include <vector>

#include "ncst/geometry.hpp"
#include "ncst/random.hpp"
#include "oracle.hpp"

using namespace ncst;

namespace {

Point random_point(Rng& rng, std::int64_t bound = kCoordinateBound) {
  return {rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
}

}  // namespace

TEST(Orient, Examples) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), Sign::Positive);
  EXPECT_EQ(orient({0, 0}, {1, 0}, {2, 0}), Sign::Zero);
  // 3*1 - 3*4 = -9
  EXPECT_EQ(cross({0, 0}, {3, 3}, {4, 1}), -9);
  EXPECT_EQ(orient({0, 0}, {3, 3}, {4, 1}), Sign::Negative);
}

TEST(Orient, ExtremeCoordinatesAreExact) {
  const Point a{-kCoordinateBound, -kCoordinateBound};
  const Point b{kCoordinateBound, kCoordinateBound};
  const Point c{kCoordinateBound, -kCoordinateBound};
  EXPECT_EQ(cross(a, b, c), -4'000'000'000'000LL);
  EXPECT_EQ(orient(a, b, {kCoordinateBound - 1, kCoordinateBound}), Sign::Positive);
}

TEST(SideOfLine, Examples) {
  EXPECT_EQ(side_of_line({0, 0}, {6, 0}, {3, 3}), Sign::Positive);
  EXPECT_EQ(side_of_line({0, 0}, {6, 0}, {3, -3}), Sign::Negative);
  EXPECT_EQ(side_of_line({0, 0}, {6, 0}, {4, 0}), Sign::Zero);
  EXPECT_THROW(side_of_line({1, 1}, {1, 1}, {0, 0}), GeometryError);
}

TEST(SegmentsCross, Examples) {
  EXPECT_TRUE(segments_cross({0, 0}, {6, 6}, {6, 0}, {0, 6}));
  EXPECT_FALSE(segments_cross({0, 0}, {6, 0}, {6, 0}, {6, 6}));
  EXPECT_FALSE(segments_cross({0, 0}, {6, 0}, {0, 6}, {6, 6}));
}

TEST(LineMeetsOpenSegment, Examples) {
  // y = x/4 hits x = 6 at y = 1.5
  EXPECT_TRUE(line_meets_open_segment({0, 0}, {4, 1}, {6, 0}, {6, 6}));
  EXPECT_FALSE(line_meets_open_segment({0, 0}, {6, 0}, {6, 0}, {6, 6}));
  EXPECT_FALSE(line_meets_open_segment({0, 0}, {1, 1}, {4, 0}, {5, 0}));
  EXPECT_THROW(line_meets_open_segment({2, 2}, {2, 2}, {0, 0}, {1, 0}), GeometryError);
}

TEST(ConvexHull, Examples) {
  const std::vector<Point> square{{0, 0}, {6, 0}, {6, 6}, {0, 6}};
  EXPECT_EQ(convex_hull_ccw(square), (std::vector<std::size_t>{0, 1, 2, 3}));

  auto with_interior = square;
  with_interior.push_back({4, 1});
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(orient(square[i], square[(i + 1) % 4], {4, 1}), Sign::Positive);
  }
  EXPECT_EQ(convex_hull_ccw(with_interior), (std::vector<std::size_t>{0, 1, 2, 3}));

  EXPECT_EQ(convex_hull_ccw(std::vector<Point>{{0, 0}, {2, 0}, {1, 2}}), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ConvexHull, StartsAtLexicographicMinimum) {
  const std::vector<Point> pts{{5, 5}, {0, 6}, {6, 0}, {-1, 2}, {2, 2}};
  const auto hull = convex_hull_ccw(pts);
  EXPECT_EQ(hull.front(), 3U);
  EXPECT_EQ(hull, (std::vector<std::size_t>{3, 2, 0, 1}));
}

TEST(ConvexHull, Errors) {
  EXPECT_THROW(convex_hull_ccw(std::vector<Point>{{0, 0}, {1, 1}}), GeometryError);
  EXPECT_THROW(convex_hull_ccw(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}), GeometryError);
  EXPECT_THROW(convex_hull_ccw(std::vector<Point>{{0, 0}, {0, 0}, {2, 1}}), GeometryError);
}

TEST(GeneralPosition, Examples) {
  EXPECT_FALSE(assert_general_position(std::vector<Point>{{0, 0}, {6, 0}, {6, 6}, {0, 6}, {4, 1}}));

  const std::vector<Point> line{{0, 3}, {3, 0}, {2, 1}, {7, 7}};
  auto v = assert_general_position(line);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, GeneralPositionViolation::Kind::Collinear);
  EXPECT_EQ(v->indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_NE(v->describe(line).find("(2,1)"), std::string::npos);

  const std::vector<Point> dup{{1, 1}, {1, 1}, {5, 0}};
  v = assert_general_position(dup);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, GeneralPositionViolation::Kind::Duplicate);
  EXPECT_EQ(v->indices, (std::vector<std::size_t>{0, 1}));

  const std::vector<Point> far{{0, 0}, {kCoordinateBound + 1, 0}, {0, 1}};
  v = assert_general_position(far);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, GeneralPositionViolation::Kind::OutOfRange);
}

TEST(OrientProperty, CyclicAndAntisymmetric) {
  Rng rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
    const Sign s = orient(p, q, r);
    ASSERT_EQ(s, orient(q, r, p));
    ASSERT_EQ(s, orient(r, p, q));
    ASSERT_EQ(s, -orient(p, r, q));
    ASSERT_EQ(to_int(s), oracle::sgn(oracle::det({p.x, p.y}, {q.x, q.y}, {r.x, r.y})));
  }
}

TEST(SegmentsCrossProperty, SymmetricAndImpliesLineCrossing) {
  Rng rng(12);
  for (int trial = 0; trial < 10000; ++trial) {
    // Small box so crossings are frequent.
    const Point a = random_point(rng, 20), b = random_point(rng, 20), c = random_point(rng, 20),
                d = random_point(rng, 20);
    if (!assert_general_position(std::vector<Point>{a, b, c, d}).has_value()) {
      const bool x = segments_cross(a, b, c, d);
      ASSERT_EQ(x, segments_cross(c, d, a, b));
      ASSERT_EQ(x, segments_cross(b, a, c, d));
      ASSERT_EQ(x, segments_cross(a, b, d, c));
      ASSERT_EQ(x, oracle::proper_cross({a.x, a.y}, {b.x, b.y}, {c.x, c.y}, {d.x, d.y}));
      if (x) { ASSERT_TRUE(line_meets_open_segment(a, b, c, d)); }
    }
  }
}

TEST(ConvexHullProperty, ContainsEveryPoint) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = random_general_position(rng, 3 + rng.index(20), 1000);
    const auto hull = convex_hull_ccw(pts);
    for (const auto& p : pts) {
      for (std::size_t i = 0; i < hull.size(); ++i) {
        ASSERT_NE(orient(pts[hull[i]], pts[hull[(i + 1) % hull.size()]], p), Sign::Negative);
      }
    }
    for (std::size_t i = 1; i < hull.size(); ++i) ASSERT_LT(pts[hull[0]], pts[hull[i]]);
  }
}
