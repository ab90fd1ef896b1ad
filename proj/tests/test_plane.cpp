#include <gtest/gtest.h>

#include "lattrig/plane.hpp"
#include "oracles.hpp"

using namespace lattrig;

namespace {

AffMap random_map(oracle::Gen& g, bool allow_improper) {
  auto m = g.unimodular(allow_improper);
  return AffMap(m[0], m[1], m[2], m[3], {g.range(-20, 20), g.range(-20, 20)});
}

}  // namespace

TEST(Primitive, SplitsGcd) {
  auto [u, n] = primitive({6, -9});
  EXPECT_EQ(u, (LVec{2, -3}));
  EXPECT_EQ(n, 3);
  EXPECT_EQ(prim({0, -5}), (LVec{0, -1}));
  EXPECT_THROW(primitive({0, 0}), std::domain_error);
}

TEST(LatticeLength, CountsSegments) {
  EXPECT_EQ(lattice_length({0, 0}, {6, 4}), 2);
  EXPECT_EQ(lattice_length({1, 1}, {1, 8}), 7);
  EXPECT_THROW(lattice_length({2, 2}, {2, 2}), std::domain_error);
}

TEST(Area, SignedAndPolygon) {
  EXPECT_EQ(lattice_area2x({0, 0}, {2, 0}, {0, 1}), 2);
  EXPECT_EQ(lattice_area2x({0, 0}, {0, 1}, {2, 0}), -2);
  std::vector<LPoint> square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  EXPECT_EQ(polygon_area2x(square), 8);
  std::reverse(square.begin(), square.end());
  EXPECT_EQ(polygon_area2x(square), 8);
}

TEST(AffMap, RejectsNonUnimodular) {
  EXPECT_THROW(AffMap(2, 0, 0, 1), std::domain_error);
  EXPECT_NO_THROW(AffMap(0, 1, 1, 0));
}

TEST(AffMap, ComposeAndInverse) {
  oracle::Gen g(31);
  for (int i = 0; i < 200; ++i) {
    AffMap f = random_map(g, true), h = random_map(g, true);
    LPoint p = g.point(30);
    EXPECT_EQ(f.compose(h)(p), f(h(p)));
    EXPECT_EQ(f.inverse()(f(p)), p);
    EXPECT_EQ(f.compose(h).det(), f.det() * h.det());
  }
}

TEST(AffMap, ToXAxis) {
  oracle::Gen g(32);
  for (int i = 0; i < 300; ++i) {
    LVec v = g.primitive_vec(40);
    AffMap f = AffMap::to_x_axis(v);
    EXPECT_TRUE(f.proper());
    EXPECT_EQ(f(v), (LVec{1, 0}));
  }
  EXPECT_THROW(AffMap::to_x_axis({2, 4}), std::domain_error);
}

TEST(Invariance, LengthAndAreaUnderUnimodularMaps) {
  oracle::Gen g(33);
  for (int m = 0; m < 100; ++m) {
    AffMap f = random_map(g, true);
    for (int i = 0; i < 100; ++i) {
      auto [a, b, c] = g.triangle(25);
      EXPECT_EQ(lattice_length(f(a), f(b)), lattice_length(a, b));
      EXPECT_EQ(abs_int(lattice_area2x(f(a), f(b), f(c))), abs_int(lattice_area2x(a, b, c)));
    }
  }
}

TEST(Invariance, OrientationSign) {
  oracle::Gen g(34);
  for (int i = 0; i < 500; ++i) {
    AffMap f = random_map(g, true);
    auto [a, b, c] = g.triangle(25);
    int expected = f.proper() ? sgn3(a, b, c) : -sgn3(a, b, c);
    EXPECT_EQ(sgn3(f(a), f(b), f(c)), expected);
  }
}

TEST(UnitDistance, EquivalentToAreaEqualsLength) {
  oracle::Gen g(35);
  int hits = 0;
  for (int i = 0; i < 3000; ++i) {
    auto [a, b, c] = g.triangle(6);
    bool u = unit_distance(a, b, c);
    EXPECT_EQ(u, abs_int(lattice_area2x(a, b, c)) == lattice_length(a, b));
    hits += u;
  }
  EXPECT_GT(hits, 50);
}

TEST(Parsing, Points) {
  auto pts = parse_points("0,0; 2,0;0,1");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1], (LPoint{2, 0}));
  EXPECT_EQ(to_string(pts[1]), "(2,0)");
  EXPECT_THROW(parse_points("1,2,3"), std::invalid_argument);
}
