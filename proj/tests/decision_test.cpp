#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace yolk {
namespace {

const PointSet kSquare({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
constexpr int kSides[] = {3, 4, 7, 12};

TEST(Decide, KnownValues) {
  EXPECT_TRUE(decide({4, 1.0, 0.0, 0.0}, kSquare));
  EXPECT_FALSE(decide({4, 0.5, 0.0, 0.0}, kSquare));
  const PointSet single({{2.5, -1.0}});
  for (int k : {3, 4, 9})
    for (double r : {0.0, 0.3, 7.0}) EXPECT_TRUE(decide({k, r, 2.5, -1.0}, single));
}

TEST(Decide, AllPointsInsideIsFeasible) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<Point> pts;
  for (int i = 0; i < 30; ++i) pts.push_back({U(rng), U(rng)});
  EXPECT_TRUE(decide({3, 5.0, 0.0, 0.0}, PointSet(pts)));
}

TEST(SweepEvents, KnownValues) {
  const PolygonParams P{4, 1.0, 0.0, 0.0};
  EXPECT_EQ(sweep_events(PointSet({{0, 3}, {3, 0}}), P).size(), 4u);
  EXPECT_TRUE(sweep_events(PointSet({{0, 0}}), P).empty());
  EXPECT_TRUE(sweep_events(PointSet({{0.5, 0.5}}), P).empty());
}

TEST(SweepEvents, SortedPairedAndInRange) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const PointSet V(testing::random_points(rng, 1 + rng() % 16));
    const PolygonParams P = testing::random_polygon(rng, kSides[rng() % 4]);
    const auto ev = sweep_events(V, P);
    std::vector<int> enters(V.size()), exits(V.size());
    for (std::size_t i = 0; i < ev.size(); ++i) {
      EXPECT_GE(ev[i].angle_key, 0.0);
      EXPECT_LE(ev[i].angle_key, kTwoPi);
      if (i) EXPECT_LE(ev[i - 1].angle_key, ev[i].angle_key + 1e-9);
      (ev[i].kind == EventKind::Enter ? enters : exits)[ev[i].point_index]++;
    }
    for (std::size_t i = 0; i < V.size(); ++i) {
      EXPECT_EQ(enters[i], exits[i]);
      EXPECT_LE(enters[i], 1);
      EXPECT_EQ(enters[i] == 1, classify_point(V[i], P) == Location::Outside);
    }
  }
}

TEST(Decide, AgreesWithBruteForce) {
  std::mt19937_64 rng(23);
  int feasible = 0;
  for (int t = 0; t < 1000; ++t) {
    const PointSet V(testing::random_points(rng, 1 + rng() % 16));
    PolygonParams P = testing::random_polygon(rng, kSides[rng() % 4]);
    if (t % 10 == 0) P.r = 0.0;
    const bool fast = decide(P, V);
    ASSERT_EQ(fast, decide_bruteforce(P, V)) << "instance " << t;
    feasible += fast;
  }
  // Both verdicts must be well represented for the comparison to mean anything.
  EXPECT_GT(feasible, 100);
  EXPECT_LT(feasible, 900);
}

TEST(Decide, CounterIsConserved) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 500; ++t) {
    const PointSet V(testing::random_points(rng, 1 + rng() % 16));
    const PolygonParams P = testing::random_polygon(rng, kSides[rng() % 4]);
    const SweepSummary s = decide_detailed(P, V);
    EXPECT_EQ(s.final_count, s.initial_count);
    EXPECT_GE(s.min_count, 0);
    // Independent initial count: points strictly above the top vertex.
    long above = 0;
    for (const Point& p : V) above += p.y > P.y + P.r + 1e-12 ? 1 : 0;
    EXPECT_EQ(s.initial_count, above);
  }
}

TEST(Decide, MonotoneInRadius) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> grow(0.0, 2.0);
  int violations = 0;
  int informative = 0;
  for (int t = 0; t < 500; ++t) {
    const PointSet V(testing::random_points(rng, 1 + rng() % 16));
    const PolygonParams P = testing::random_polygon(rng, kSides[rng() % 4]);
    if (!decide(P, V)) continue;
    ++informative;
    PolygonParams bigger = P;
    bigger.r += grow(rng);
    violations += decide(bigger, V) ? 0 : 1;
  }
  EXPECT_EQ(violations, 0);
  EXPECT_GT(informative, 50);
}

TEST(Decide, FeasibleSetIsConvex) {
  std::mt19937_64 rng(26);
  int violations = 0;
  int trials = 0;
  while (trials < 500) {
    const PointSet V(testing::random_points(rng, 2 + rng() % 15));
    const int k = kSides[rng() % 4];
    const PolygonParams a = testing::random_polygon(rng, k);
    const PolygonParams b = testing::random_polygon(rng, k);
    if (!decide(a, V) || !decide(b, V)) continue;
    ++trials;
    const PolygonParams mid{k, 0.5 * (a.r + b.r), 0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    violations += decide(mid, V) ? 0 : 1;
  }
  EXPECT_EQ(violations, 0);
}

TEST(DecisionTrace, RecordedOutcomesMatchHyperplanes) {
  std::mt19937_64 rng(27);
  std::size_t total = 0;
  for (int t = 0; t < 200; ++t) {
    const PointSet V(testing::random_points(rng, 1 + rng() % 16));
    const PolygonParams P = testing::random_polygon(rng, kSides[rng() % 4]);
    DecisionTrace trace;
    const bool verdict = decide(P, V, trace);
    EXPECT_EQ(verdict, trace.verdict);
    EXPECT_EQ(verdict, decide(P, V));
    EXPECT_DOUBLE_EQ(trace.frame_rotation, trace_frame_rotation(P.k));
    for (const TracedComparison& c : trace.comparisons) {
      const Side side = hyperplane_side(c.plane, P, 1e-9);
      if (side == Side::On) continue;
      ASSERT_EQ(side, c.outcome);
      ++total;
    }
  }
  EXPECT_GT(total, 1000u);
}

TEST(DecisionTrace, SidePreservingPerturbationKeepsVerdict) {
  std::mt19937_64 rng(28);
  std::normal_distribution<double> N(0.0, 1.0);
  int preserved = 0;
  for (int t = 0; t < 200; ++t) {
    const PointSet V(testing::random_points(rng, 1 + rng() % 16));
    PolygonParams P = testing::random_polygon(rng, kSides[rng() % 4]);
    P.r = std::max(P.r, 0.01);
    DecisionTrace trace;
    const bool verdict = decide(P, V, trace);
    for (int j = 0; j < 10; ++j) {
      const double scale = std::pow(10.0, -3.0 - static_cast<double>(rng() % 4));
      const PolygonParams Q{P.k, P.r + scale * N(rng), P.x + scale * N(rng), P.y + scale * N(rng)};
      if (Q.r < 0.0) continue;
      const bool same_sides = std::all_of(trace.comparisons.begin(), trace.comparisons.end(), [&](const auto& c) {
        return hyperplane_side(c.plane, Q, 0.0) == c.outcome;
      });
      if (!same_sides) continue;
      ++preserved;
      ASSERT_EQ(decide(Q, V), verdict) << "instance " << t;
    }
  }
  EXPECT_GT(preserved, 200);
}

}  // namespace
}  // namespace yolk
