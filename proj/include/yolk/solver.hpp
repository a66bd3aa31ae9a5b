#pragma once
/**
 * Yolk computation on top of the decision procedure.
 *
 * For a fixed centre, feasibility is monotone in r, so the smallest feasible
 * circumradius f(x, y) is found by bisection. The feasible set in (r, x, y)
 * is convex, which makes f convex; it is minimised by golden-section search
 * over x with an inner golden-section search over y.
 *
 * Metric front-ends:
 *   L1        P_4 is the L1 ball; its circumradius is the L1 radius.
 *   Linf      rotate the points 45 degrees clockwise, solve with P_4, rotate
 *             the centre back. The axis-parallel square's half side is the
 *             circumradius divided by sqrt(2).
 *   L2approx  k = choose_k(eps); the circumscribed disk is within 1+eps.
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "yolk/decision.hpp"
#include "yolk/geometry.hpp"
#include "yolk/median_lines.hpp"

namespace yolk {

enum class Metric { L1, L2Approx, Linf };

inline std::string to_string(Metric m) {
  switch (m) {
    case Metric::L1: return "l1";
    case Metric::L2Approx: return "l2";
    case Metric::Linf: return "linf";
  }
  return "?";
}

inline constexpr int kSearchIterationCap = 200;

/// Counts decision calls made by the solver.
struct DecisionCounter {
  long calls = 0;
};

/// Smallest k with sec(pi/k) <= 1 + eps.
inline int choose_k(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("epsilon must be positive and finite");
  const double k = std::ceil(kPi * (1.0 + 1.0 / eps));
  if (k > 1e8) throw std::invalid_argument("epsilon too small");
  return std::max(3, static_cast<int>(k));
}

namespace detail {

// Bisection for the feasibility threshold of P_k(., x, y), starting from a
// bracket [lo, hi] believed to contain it. Returns a feasible radius.
inline double bisect_radius(double x, double y, int k, const PointSet& V, double tol, double lo, double hi,
                            DecisionCounter* counter) {
  auto feasible = [&](double r) {
    if (counter) ++counter->calls;
    return decide(PolygonParams{k, r, x, y}, V);
  };
  hi = std::max(hi, tol);
  while (!feasible(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  lo = std::max(0.0, std::min(lo, hi));
  if (feasible(lo)) {
    if (lo == 0.0) return 0.0;
    hi = lo;
    lo = 0.0;
    if (feasible(lo)) return lo;
  }
  for (int it = 0; it < kSearchIterationCap && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace detail

/**
 * Smallest circumradius r (to within tol) such that P_k(r, x, y) meets every
 * median line. The returned value is always a feasible radius.
 */
inline double min_radius_at(double x, double y, int k, const PointSet& V, double tol,
                            DecisionCounter* counter = nullptr) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  const Point c{x, y};
  double farthest = 0.0;
  for (const Point& p : V) farthest = std::max(farthest, norm(p - c));
  // With inradius >= farthest the polygon covers the convex hull of V, and
  // every median line meets the hull.
  const double hi = farthest / std::cos(kPi / k) * (1.0 + 1e-9) + tol;
  return detail::bisect_radius(x, y, k, V, tol, 0.0, hi, counter);
}

namespace detail {

struct Probe {
  double arg;
  double value;
};

// Golden-section search for the minimum of a convex function on [lo, hi];
// returns the best probe evaluated. The probe schedule depends only on the
// comparisons of earlier values.
inline Probe golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (!(hi - lo > tol)) {
    const double mid = 0.5 * (lo + hi);
    return {mid, f(mid)};
  }
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  Probe best = fc <= fd ? Probe{c, fc} : Probe{d, fd};
  for (int it = 0; it < kSearchIterationCap && b - a > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

struct PolygonFit {
  Point center;
  double circumradius;
};

// Minimises f(x, y) = min_radius_at(x, y, k, V) over a box that provably
// contains a minimiser: a centre at Euclidean distance D from the hull needs
// circumradius >= D, while any hull point needs at most diam / cos(pi/k).
inline PolygonFit smallest_polygon(const PointSet& V, int k, double tol, DecisionCounter& counter) {
  double xmin = V[0].x, xmax = V[0].x, ymin = V[0].y, ymax = V[0].y;
  for (const Point& p : V) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double margin = 2.0 * std::hypot(xmax - xmin, ymax - ymin);
  xmin -= margin;
  xmax += margin;
  ymin -= margin;
  ymax += margin;

  // Moving the centre by d changes the threshold by at most d / cos(pi/k),
  // so each evaluation is bracketed around the previous one.
  const double lipschitz = 1.0 / std::cos(kPi / k);
  bool have_last = false;
  Point last{};
  double last_value = 0.0;
  auto radius_at = [&](double x, double y) {
    double v;
    if (!have_last) {
      v = min_radius_at(x, y, k, V, tol, &counter);
    } else {
      const double reach = lipschitz * norm(Point{x, y} - last) * (1.0 + 1e-9) + tol;
      v = bisect_radius(x, y, k, V, tol, last_value - reach, last_value + reach, &counter);
    }
    have_last = true;
    last = {x, y};
    last_value = v;
    return v;
  };

  double best_y_for_x = 0.0;
  auto inner = [&](double x) {
    const Probe p = golden_section([&](double y) { return radius_at(x, y); }, ymin, ymax, tol);
    best_y_for_x = p.arg;
    return p.value;
  };
  // Remember where the best outer probe's inner optimum was.
  double best_value = std::numeric_limits<double>::infinity();
  Point best_center{};
  auto outer = [&](double x) {
    const double v = inner(x);
    if (v < best_value) {
      best_value = v;
      best_center = {x, best_y_for_x};
    }
    return v;
  };
  golden_section(outer, xmin, xmax, tol);
  return {best_center, best_value};
}

}  // namespace detail

struct YolkResult {
  Metric metric = Metric::L1;
  Point center;
  double radius = 0.0;  // in the metric's own ball family
  int k_used = 4;
  std::optional<double> epsilon;
  double tolerance = 0.0;
  long decisions_evaluated = 0;
  // Certificate: P_k(circumradius, polygon_center) in the frame rotated
  // counterclockwise by frame_rotation is feasible.
  double circumradius = 0.0;
  Point polygon_center;
  double frame_rotation = 0.0;
};

inline YolkResult compute_yolk(const PointSet& V, Metric metric, std::optional<double> eps, double tol) {
  if (V.size() == 0) throw std::invalid_argument("empty point set");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be positive and finite");
  YolkResult out;
  out.metric = metric;
  out.tolerance = tol;
  int k = 4;
  double rotation = 0.0;
  if (metric == Metric::L2Approx) {
    if (!eps) throw std::invalid_argument("the approximate L2 yolk needs epsilon");
    k = choose_k(*eps);
    out.epsilon = eps;
  } else if (eps) {
    throw std::invalid_argument("epsilon only applies to the L2 metric");
  }
  if (metric == Metric::Linf) rotation = -kPi / 4.0;

  std::vector<Point> pts(V.begin(), V.end());
  if (rotation != 0.0)
    for (Point& p : pts) p = rotate(p, rotation);
  const PointSet frame(std::move(pts));

  DecisionCounter counter;
  const auto fit = detail::smallest_polygon(frame, k, tol, counter);
  out.k_used = k;
  out.decisions_evaluated = counter.calls;
  out.circumradius = fit.circumradius;
  out.polygon_center = fit.center;
  out.frame_rotation = rotation;
  out.center = rotation != 0.0 ? rotate(fit.center, -rotation) : fit.center;
  out.radius = metric == Metric::Linf ? fit.circumradius / std::sqrt(2.0) : fit.circumradius;
  return out;
}

}  // namespace yolk
