#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace yolk {
namespace {

using testing::numeric_tangent_order;
using testing::random_outside_point;
using testing::reference_outside_margin;
using testing::reference_vertices;
using testing::starting_at_p_entry;

TEST(PolygonVertex, KnownValues) {
  const Point a = polygon_vertex({4, 1.0, 0.0, 0.0}, 0);
  EXPECT_NEAR(a.x, 0.0, 1e-15);
  EXPECT_NEAR(a.y, 1.0, 1e-15);
  const Point b = polygon_vertex({4, 1.0, 0.0, 0.0}, 1);
  EXPECT_NEAR(b.x, 1.0, 1e-15);
  EXPECT_NEAR(b.y, 0.0, 1e-15);
  const Point c = polygon_vertex({3, 2.0, 1.0, 1.0}, 1);
  EXPECT_NEAR(c.x, 1.0 + std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(c.y, 0.0, 1e-12);
}

TEST(PolygonVertex, RejectsBadIndexAndParams) {
  EXPECT_THROW(polygon_vertex({4, 1.0, 0.0, 0.0}, 4), std::out_of_range);
  EXPECT_THROW(polygon_vertex({4, 1.0, 0.0, 0.0}, -1), std::out_of_range);
  EXPECT_THROW(polygon_vertex({2, 1.0, 0.0, 0.0}, 0), std::invalid_argument);
  EXPECT_THROW(polygon_vertex({4, -1.0, 0.0, 0.0}, 0), std::invalid_argument);
}

TEST(PolygonVertex, VerticesLieOnCircumcircle) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> K(3, 1000);
  for (int t = 0; t < 2000; ++t) {
    const PolygonParams P = testing::random_polygon(rng, K(rng), 50.0);
    const int i = static_cast<int>(rng() % P.k);
    const double d = norm(polygon_vertex(P, i) - P.center());
    EXPECT_NEAR(d, P.r, 1e-9 * (1.0 + P.r));
  }
}

TEST(ClassifyPoint, KnownValues) {
  const PolygonParams P{4, 1.0, 0.0, 0.0};
  EXPECT_EQ(classify_point({0.0, 0.0}, P), Location::Inside);
  EXPECT_EQ(classify_point({2.0, 0.0}, P), Location::Outside);
  EXPECT_EQ(classify_point({0.5, 0.5}, P), Location::Boundary);
}

TEST(ClassifyPoint, DegeneratePolygon) {
  const PolygonParams P{5, 0.0, 1.0, 2.0};
  EXPECT_EQ(classify_point({1.0, 2.0}, P), Location::Boundary);
  EXPECT_EQ(classify_point({1.0, 2.5}, P), Location::Outside);
}

TEST(ClassifyPoint, AgreesWithEdgeByEdgeTest) {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> K(3, 1000);
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  int checked = 0;
  for (int t = 0; t < 10000; ++t) {
    const PolygonParams P = testing::random_polygon(rng, K(rng));
    if (P.r == 0.0) continue;
    const Point p{U(rng), U(rng)};
    const double margin = reference_outside_margin(p, reference_vertices(P));
    if (std::abs(margin) < 1e-9) continue;  // too close to call in floating point
    const Location expected = margin > 0.0 ? Location::Outside : Location::Inside;
    ASSERT_EQ(classify_point(p, P), expected) << "k=" << P.k << " r=" << P.r;
    ++checked;
  }
  EXPECT_GT(checked, 9900);
}

TEST(ClassifyPoint, VerticesAndEdgeMidpointsAreBoundary) {
  std::mt19937_64 rng(203);
  for (int t = 0; t < 500; ++t) {
    const int k = 3 + static_cast<int>(rng() % 40);
    const PolygonParams P{k, 1.0 + (rng() % 100) / 50.0, 0.25, -0.5};
    const int i = static_cast<int>(rng() % k);
    const Point a = polygon_vertex(P, i);
    const Point b = polygon_vertex(P, (i + 1) % k);
    EXPECT_EQ(classify_point(a, P), Location::Boundary);
    EXPECT_EQ(classify_point(0.5 * (a + b), P), Location::Boundary);
  }
}

TEST(TangentVertices, KnownValues) {
  const PolygonParams P{4, 1.0, 0.0, 0.0};
  const TangentPair a = tangent_vertices({0.0, 3.0}, P);
  EXPECT_EQ(a.entry_vertex, 3);
  EXPECT_EQ(a.exit_vertex, 1);
  const TangentPair b = tangent_vertices({3.0, 0.0}, P);
  EXPECT_EQ(b.entry_vertex, 0);
  EXPECT_EQ(b.exit_vertex, 2);
  const TangentPair c = tangent_vertices({2.0, 2.0}, P);
  EXPECT_EQ(c.entry_vertex, 0);
  EXPECT_EQ(c.exit_vertex, 1);
}

TEST(TangentVertices, EdgeParallelTieTakesFirstClockwiseEndpoint) {
  // From (2, -1) the line y = 1 - x through the edge from vertex 0 to 1 supports the square.
  const PolygonParams P{4, 1.0, 0.0, 0.0};
  const TangentPair t = tangent_vertices({2.0, -1.0}, P);
  EXPECT_EQ(t.entry_vertex, 0);
}

TEST(TangentVertices, RejectsPointsNotOutside) {
  const PolygonParams P{4, 1.0, 0.0, 0.0};
  EXPECT_THROW(tangent_vertices({0.0, 0.0}, P), std::invalid_argument);
  EXPECT_THROW(tangent_vertices({0.5, 0.5}, P), std::invalid_argument);
}

TEST(TangentVertices, DegeneratePolygonGivesTopVertexTwice) {
  const TangentPair t = tangent_vertices({3.0, 1.0}, PolygonParams{6, 0.0, 0.0, 0.0});
  EXPECT_EQ(t.entry_vertex, 0);
  EXPECT_EQ(t.exit_vertex, 0);
}

TEST(TangentVertices, LinesSupportThePolygonInClockwiseOrder) {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> K(3, 200);
  for (int t = 0; t < 5000; ++t) {
    const PolygonParams P = testing::random_polygon(rng, K(rng));
    if (P.r == 0.0) continue;
    const Point p = random_outside_point(rng, P);
    const TangentPair tp = tangent_vertices(p, P);
    const auto v = reference_vertices(P);
    for (int idx : {tp.entry_vertex, tp.exit_vertex}) {
      const Point d = v[idx] - p;
      double lo = 0.0, hi = 0.0;
      for (const Point& w : v) {
        lo = std::min(lo, cross(d, w - p));
        hi = std::max(hi, cross(d, w - p));
      }
      const double slack = 1e-9 * norm(d) * (1.0 + P.r);
      ASSERT_FALSE(lo < -slack && hi > slack) << "vertex " << idx << " does not support, k=" << P.k;
    }
    // p_e, p, p_x clockwise: the turn p_e -> p -> p_x is to the right.
    if (tp.entry_vertex != tp.exit_vertex) {
      EXPECT_LT(cross(p - v[tp.entry_vertex], v[tp.exit_vertex] - p), 0.0);
    }
  }
}

TEST(TangentOrder, KnownValues) {
  using enum TangentId;
  const PolygonParams P{4, 1.0, 0.0, 0.0};
  using Seq = std::array<TangentId, 4>;
  EXPECT_EQ(starting_at_p_entry(tangent_order({0.0, 3.0}, {0.0, -3.0}, P).sequence),
            (Seq{PEntry, PExit, QEntry, QExit}));
  const TangentOrder left = tangent_order({-4.0, 2.0}, {-4.0, -2.0}, P);
  EXPECT_EQ(left.p_region, Region::L);
  EXPECT_EQ(left.q_region, Region::L);
  EXPECT_EQ(starting_at_p_entry(left.sequence), starting_at_p_entry(Seq{QEntry, PEntry, QExit, PExit}));
  // p=(0,4), q=(0.5,3.2): the line pq misses the square, so both points lie
  // on one side of both parallel tangents (region R); the numeric angles
  // give p_e q_e p_x q_x.
  const TangentOrder up = tangent_order({0.0, 4.0}, {0.5, 3.2}, P);
  EXPECT_EQ(up.p_region, Region::R);
  EXPECT_EQ(starting_at_p_entry(up.sequence), (Seq{PEntry, QEntry, PExit, QExit}));
  EXPECT_EQ(numeric_tangent_order({0.0, 4.0}, {0.5, 3.2}, P), std::optional<Seq>(Seq{PEntry, QEntry, PExit, QExit}));
}

TEST(TangentOrder, RejectsInvalidPoints) {
  const PolygonParams P{4, 1.0, 0.0, 0.0};
  EXPECT_THROW(tangent_order({0.0, 3.0}, {0.0, 3.0}, P), std::invalid_argument);
  EXPECT_THROW(tangent_order({0.0, 0.0}, {0.0, 3.0}, P), std::invalid_argument);
  EXPECT_THROW(tangent_order({0.0, 3.0}, {0.0, 1.0}, P), std::invalid_argument);
}

TEST(TangentOrder, AgreesWithNumericAngles) {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> K(3, 60);
  int checked = 0;
  int regions[4] = {0, 0, 0, 0};
  while (checked < 10000) {
    PolygonParams P = testing::random_polygon(rng, K(rng));
    P.r = std::max(P.r, 0.05);
    const Point p = random_outside_point(rng, P);
    const Point q = random_outside_point(rng, P);
    const auto expected = numeric_tangent_order(p, q, P);
    if (!expected) continue;  // two tangents too close to order reliably
    const TangentOrder got = tangent_order(p, q, P);
    ASSERT_EQ(starting_at_p_entry(got.sequence), *expected)
        << "p=(" << p.x << "," << p.y << ") q=(" << q.x << "," << q.y << ") k=" << P.k;
    ++regions[static_cast<int>(got.p_region)];
    ++checked;
  }
  for (int count : regions) EXPECT_GT(count, 0);
}

TEST(CriticalHyperplane, KnownValues) {
  auto expect = [](const CriticalHyperplane& h, double a, double b, double c, double d) {
    EXPECT_DOUBLE_EQ(h.a, a);
    EXPECT_DOUBLE_EQ(h.b, b);
    EXPECT_DOUBLE_EQ(h.c, c);
    EXPECT_DOUBLE_EQ(h.d, d);
  };
  expect(critical_hyperplane(1.0, {0.0, 1.0}, {2.0, 3.0}), 1.0, -1.0, -1.0, 1.0);
  expect(critical_hyperplane(0.0, {0.0, 0.0}, {0.0, 5.0}), 0.0, -1.0, 0.0, 5.0);
  expect(critical_hyperplane(2.0, {1.0, 0.0}, {0.0, 0.0}), 2.0, -1.0, 2.0, 0.0);
}

TEST(HyperplaneSide, KnownValues) {
  const CriticalHyperplane h{1.0, -1.0, -1.0, 1.0};
  EXPECT_EQ(hyperplane_side(h, {4, 0.0, 0.0, 0.0}), Side::Above);
  EXPECT_EQ(hyperplane_side(h, {4, 1.0, 0.0, 0.0}), Side::On);
  EXPECT_EQ(hyperplane_side({0.0, -1.0, 0.0, 5.0}, {4, 3.0, 7.0, 6.0}), Side::Below);
}

TEST(CriticalHyperplane, SideMatchesDirectLineTest) {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> U(-5.0, 5.0), G(-20.0, 20.0), R(0.0, 5.0);
  int checked = 0;
  for (int t = 0; t < 10000; ++t) {
    const double g = G(rng);
    const Point v{U(rng), U(rng)};
    const Point p{U(rng), U(rng)};
    const PolygonParams lambda{4, R(rng), U(rng), U(rng)};
    // Height of p above the line through anchor with slope g.
    const Point anchor{lambda.x + lambda.r * v.x, lambda.y + lambda.r * v.y};
    const double height = (p.y - anchor.y) - g * (p.x - anchor.x);
    if (std::abs(height) < 1e-9) continue;
    const Side direct = height > 0.0 ? Side::Above : Side::Below;
    ASSERT_EQ(hyperplane_side(critical_hyperplane(g, v, p), lambda), direct);
    ++checked;
  }
  EXPECT_GT(checked, 9900);
}

}  // namespace
}  // namespace yolk
