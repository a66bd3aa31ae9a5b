#pragma once
// Median lines of a planar point set and the O(n^3) enumeration of limiting
// median lines (median lines through two or more points).

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "yolk/geometry.hpp"

namespace yolk {

/// A non-empty set of pairwise distinct, finite points.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("point set is empty");
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (!is_finite(points_[i]))
        throw std::invalid_argument("point " + std::to_string(i) + " has a non-finite coordinate");
    std::vector<Point> sorted = points_;
    std::sort(sorted.begin(), sorted.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("point set contains duplicate points");
  }

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
};

/**
 * The line a*u + b*v = c with (a, b) a unit vector whose first non-zero
 * component is positive, so that equal lines have equal coefficients.
 */
struct Line {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;

  static Line from_coefficients(double a, double b, double c) {
    const double len = std::hypot(a, b);
    if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(c))
      throw std::invalid_argument("line needs a finite non-zero normal");
    a /= len;
    b /= len;
    c /= len;
    constexpr double zero = 1e-12;
    if (a < -zero || (std::abs(a) <= zero && b < 0.0)) {
      a = -a;
      b = -b;
      c = -c;
    }
    return {a, b, c};
  }

  static Line through(Point p, Point q) {
    const Point d = q - p;
    if (d.x == 0.0 && d.y == 0.0) throw std::invalid_argument("line through coincident points");
    const double a = -d.y;
    const double b = d.x;
    return from_coefficients(a, b, a * p.x + b * p.y);
  }

  Point normal() const { return {a, b}; }
  double signed_distance(Point z) const { return a * z.x + b * z.y - c; }

  bool approx_equal(const Line& o, double tol = 1e-9) const {
    auto close = [tol](double u, double v) { return std::abs(u - v) <= tol; };
    return (close(a, o.a) && close(b, o.b) && close(c, o.c)) ||
           (close(a, -o.a) && close(b, -o.b) && close(c, -o.c));
  }
};

inline constexpr double kMedianSideTolerance = 1e-12;

struct SideCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

inline SideCounts count_sides(const Line& l, std::span<const Point> pts) {
  SideCounts out;
  for (const Point& p : pts) {
    const double s = l.signed_distance(p);
    if (s > kMedianSideTolerance)
      ++out.positive;
    else if (s < -kMedianSideTolerance)
      ++out.negative;
  }
  return out;
}

// Each open half-plane holds at most n/2 points.
inline bool is_median_line(const Line& l, const PointSet& V) {
  const auto counts = count_sides(l, V.points());
  const std::size_t n = V.size();
  return 2 * counts.positive <= n && 2 * counts.negative <= n;
}

/// Deduplicated median lines through at least two points. O(n^3); meant for small n.
inline std::vector<Line> limiting_median_lines(const PointSet& V) {
  if (V.size() < 2) throw std::invalid_argument("limiting median lines need at least two points");
  std::vector<Line> out;
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j = i + 1; j < V.size(); ++j) {
      const Line l = Line::through(V[i], V[j]);
      if (!is_median_line(l, V)) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Line& o) { return o.approx_equal(l); });
      if (!seen) out.push_back(l);
    }
  }
  return out;
}

}  // namespace yolk
