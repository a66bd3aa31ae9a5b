#pragma once
/**
 * Brute-force reference implementations used to validate the decision
 * procedure and the solver.
 *
 *  - lp_min_radius: smallest ball (disk, L1 diamond or L-infinity square)
 *    meeting a set of lines, by exhaustive enumeration of 3-constraint bases.
 *  - yolk_bruteforce: the above applied to limiting median lines, refined
 *    with cutting planes from an exact farthest-median-line evaluation.
 *  - decide_bruteforce: evaluates the rotating-tangent criterion at every
 *    tangency angle and between consecutive ones, with per-point tangents
 *    found by checking each vertex directly. Shares no code with the sweep.
 *
 * All of these are O(n^3) or worse and intended for n in the tens.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yolk/geometry.hpp"
#include "yolk/median_lines.hpp"

namespace yolk {

enum class NormTag { Euclidean, Diamond, Square };

/// Ball of radius r centred at c meets line l iff |l(c)| <= r * support_scale(l).
inline double support_scale(const Line& l, NormTag norm) {
  switch (norm) {
    case NormTag::Euclidean: return std::hypot(l.a, l.b);
    case NormTag::Diamond: return std::max(std::abs(l.a), std::abs(l.b));
    case NormTag::Square: return std::abs(l.a) + std::abs(l.b);
  }
  return 1.0;
}

struct LPSolution {
  Point center;
  double radius = 0.0;
  std::vector<int> active_constraints;
};

/// Smallest radius at which a ball centred at c meets every line.
inline double radius_needed(std::span<const Line> lines, NormTag norm, Point c) {
  double r = 0.0;
  for (const Line& l : lines) r = std::max(r, std::abs(l.signed_distance(c)) / support_scale(l, norm));
  return r;
}

inline constexpr std::size_t kOracleMaxPoints = 300;

namespace detail {

inline double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// All lines parallel: the optimum is the mid-line, and the centre is taken
// as the point of it nearest the origin.
inline LPSolution parallel_family(std::span<const Line> lines, NormTag norm) {
  const Point n = lines[0].normal();
  int lo = 0;
  int hi = 0;
  std::vector<double> offsets(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const double sign = dot(lines[i].normal(), n) >= 0.0 ? 1.0 : -1.0;
    offsets[i] = sign * lines[i].c;
    if (offsets[i] < offsets[lo]) lo = static_cast<int>(i);
    if (offsets[i] > offsets[hi]) hi = static_cast<int>(i);
  }
  const double mid = 0.5 * (offsets[lo] + offsets[hi]);
  LPSolution out;
  out.center = mid * n;
  out.radius = 0.5 * (offsets[hi] - offsets[lo]) / support_scale(lines[0], norm);
  out.active_constraints = lo == hi ? std::vector<int>{lo} : std::vector<int>{lo, hi};
  return out;
}

}  // namespace detail

/**
 * min r  s.t.  -r*s_i <= a_i x + b_i y - c_i <= r*s_i  for every line i.
 * Every triple of the 2m half-space constraints is solved as an equality
 * system; among feasible solutions with minimal r the lexicographically
 * smallest centre wins. O(m^4) worst case.
 */
inline LPSolution lp_min_radius(std::span<const Line> lines, NormTag norm) {
  if (lines.empty()) throw std::invalid_argument("lp_min_radius: no lines");
  const Point n0 = lines[0].normal();
  const bool parallel =
      std::all_of(lines.begin(), lines.end(), [&](const Line& l) { return std::abs(cross(l.normal(), n0)) <= 1e-12; });
  if (parallel) return detail::parallel_family(lines, norm);

  struct HalfSpace {
    double row[3];  // coefficients of (x, y, r)
    double rhs;
    int line;
  };
  std::vector<HalfSpace> hs;
  hs.reserve(2 * lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const double s = support_scale(l, norm);
    hs.push_back({{l.a, l.b, -s}, l.c, static_cast<int>(i)});
    hs.push_back({{-l.a, -l.b, -s}, -l.c, static_cast<int>(i)});
  }

  constexpr double kFeasTol = 1e-9;
  constexpr double kTieTol = 1e-9;
  struct Candidate {
    double r;
    Point c;
    std::array<int, 3> lines;
  };
  std::vector<Candidate> feasible_bases;
  double best_r = std::numeric_limits<double>::infinity();
  const std::size_t m = hs.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t l = j + 1; l < m; ++l) {
        const HalfSpace* t[3] = {&hs[i], &hs[j], &hs[l]};
        double A[3][3];
        for (int row = 0; row < 3; ++row)
          for (int col = 0; col < 3; ++col) A[row][col] = t[row]->row[col];
        const double det = detail::det3(A);
        if (std::abs(det) < 1e-12) continue;
        // Cramer's rule, r first so most bases are rejected cheaply.
        auto solve_column = [&](int col) {
          double M[3][3];
          for (int row = 0; row < 3; ++row)
            for (int c = 0; c < 3; ++c) M[row][c] = c == col ? t[row]->rhs : A[row][c];
          return detail::det3(M) / det;
        };
        const double r = solve_column(2);
        if (r < -kFeasTol || r > best_r + kTieTol) continue;
        const Point c{solve_column(0), solve_column(1)};
        bool feasible = true;
        for (const HalfSpace& h : hs) {
          const double lhs = h.row[0] * c.x + h.row[1] * c.y + h.row[2] * r;
          if (lhs > h.rhs + kFeasTol * (1.0 + std::abs(h.rhs))) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        best_r = std::min(best_r, r);
        feasible_bases.push_back({r, c, {t[0]->line, t[1]->line, t[2]->line}});
      }
    }
  }
  if (!std::isfinite(best_r)) throw std::runtime_error("lp_min_radius: no feasible basis found");
  // Among bases within the tie tolerance of the minimum, the smallest centre.
  const Candidate* chosen = nullptr;
  for (const Candidate& cand : feasible_bases) {
    if (cand.r > best_r + kTieTol) continue;
    if (!chosen || cand.c.x < chosen->c.x - kTieTol ||
        (std::abs(cand.c.x - chosen->c.x) <= kTieTol && cand.c.y < chosen->c.y - kTieTol))
      chosen = &cand;
  }
  std::vector<int> best_active(chosen->lines.begin(), chosen->lines.end());
  const Point best_c = chosen->c;
  best_r = std::max(chosen->r, 0.0);
  std::sort(best_active.begin(), best_active.end());
  best_active.erase(std::unique(best_active.begin(), best_active.end()), best_active.end());
  return {best_c, best_r, best_active};
}

namespace detail {

// For every direction range in which the order of projections is fixed, the
// median lines of that direction are bounded by lines through one or two
// order-statistic points ("pivots"). Normals are (cos t, sin t), t in
// [begin, end]; the ranges cover a half-turn.
struct PivotArc {
  Point pivot;
  double begin;
  double end;
};

inline std::vector<PivotArc> pivot_arcs(const PointSet& V) {
  const std::size_t n = V.size();
  std::vector<double> crit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point d = V[j] - V[i];
      double t = std::atan2(d.x, -d.y);  // normal (-d.y, d.x)
      if (t < 0.0) t += kPi;
      if (t >= kPi) t -= kPi;
      crit.push_back(t);
    }
  if (crit.empty()) crit.push_back(0.0);
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  std::vector<PivotArc> out;
  std::vector<std::pair<double, std::size_t>> proj(n);
  for (std::size_t a = 0; a < crit.size(); ++a) {
    const double begin = crit[a];
    const double end = a + 1 < crit.size() ? crit[a + 1] : crit[0] + kPi;
    const double mid = 0.5 * (begin + end);
    const Point u{std::cos(mid), std::sin(mid)};
    for (std::size_t i = 0; i < n; ++i) proj[i] = {dot(u, V[i]), i};
    std::sort(proj.begin(), proj.end());
    const std::size_t lo = (n - 1) / 2;
    const std::size_t hi = n / 2;
    out.push_back({V[proj[lo].second], begin, end});
    if (hi != lo) out.push_back({V[proj[hi].second], begin, end});
  }
  return out;
}

struct WorstLine {
  double radius = 0.0;  // ball radius needed to meet `line`
  Line line;
};

// Directions where the ball's support function has a kink or, for the disk,
// where the distance to a line through `pivot` peaks.
inline std::vector<double> interior_candidates(NormTag norm, Point w) {
  switch (norm) {
    case NormTag::Euclidean:
      if (w.x == 0.0 && w.y == 0.0) return {};
      return {std::atan2(w.y, w.x)};
    case NormTag::Diamond: return {kPi / 4.0, 3.0 * kPi / 4.0};
    case NormTag::Square: return {0.0, kPi / 2.0};
  }
  return {};
}

// The median line farthest from c in the given norm, exact up to rounding:
// on each pivot arc the distance is maximised at an endpoint or at an
// interior candidate direction.
inline WorstLine worst_median_line(std::span<const PivotArc> arcs, NormTag norm, Point c) {
  WorstLine best;
  bool first = true;
  auto consider = [&](Point pivot, double t) {
    const Line l = Line::from_coefficients(std::cos(t), std::sin(t), std::cos(t) * pivot.x + std::sin(t) * pivot.y);
    const double need = std::abs(l.signed_distance(c)) / support_scale(l, norm);
    if (first || need > best.radius) {
      best = {need, l};
      first = false;
    }
  };
  for (const PivotArc& arc : arcs) {
    consider(arc.pivot, arc.begin);
    consider(arc.pivot, arc.end);
    for (double t : interior_candidates(norm, c - arc.pivot)) {
      t -= kPi * std::floor((t - arc.begin) / kPi);  // first copy >= begin
      if (t < arc.end) consider(arc.pivot, t);
    }
  }
  return best;
}

}  // namespace detail

/// Smallest radius at which the ball centred at c meets every median line of V.
inline double median_radius_at(const PointSet& V, NormTag norm, Point c) {
  const auto arcs = detail::pivot_arcs(V);
  return detail::worst_median_line(arcs, norm, c).radius;
}

/**
 * Exact yolk: smallest ball meeting every median line. Limiting median lines
 * alone can underestimate it, so the LP over them is refined by cutting
 * planes: the median line farthest from the current centre is added until
 * the centre's exact requirement matches the LP value.
 */
inline LPSolution yolk_bruteforce(const PointSet& V, NormTag norm) {
  if (V.size() < 2) throw std::invalid_argument("yolk_bruteforce needs at least two points");
  if (V.size() > kOracleMaxPoints) throw std::invalid_argument("yolk_bruteforce is limited to 300 points");
  const auto arcs = detail::pivot_arcs(V);
  std::vector<Line> lines = limiting_median_lines(V);
  constexpr int kMaxCuts = 2000;
  LPSolution sol = lp_min_radius(lines, norm);
  for (int cut = 0; cut < kMaxCuts; ++cut) {
    const auto worst = detail::worst_median_line(arcs, norm, sol.center);
    if (worst.radius <= sol.radius + 1e-11 * (1.0 + sol.radius)) break;
    const bool seen =
        std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.approx_equal(worst.line, 1e-13); });
    if (seen) break;
    lines.push_back(worst.line);
    sol = lp_min_radius(lines, norm);
  }
  // Report the radius this centre actually needs.
  sol.radius = std::max(sol.radius, detail::worst_median_line(arcs, norm, sol.center).radius);
  return sol;
}

/**
 * Independent check of the sweep predicate: for every tangent angle, the
 * open half-plane beyond the tangent must hold fewer than n/2 points.
 */
inline bool decide_bruteforce(const PolygonParams& P, const PointSet& V) {
  P.validate();
  const int k = P.k;
  std::vector<Point> verts(k);
  for (int i = 0; i < k; ++i) {
    const double theta = kPi / 2.0 - kTwoPi * i / k;
    verts[i] = {P.x + P.r * std::cos(theta), P.y + P.r * std::sin(theta)};
  }
  const Point c{P.x, P.y};
  auto support = [&](Point u) {
    double h = -std::numeric_limits<double>::infinity();
    for (const Point& v : verts) h = std::max(h, dot(u, v));
    return h;
  };
  auto beyond_count = [&](double phi, double tol) {
    const Point u{std::sin(phi), std::cos(phi)};
    const double h = support(u);
    long count = 0;
    for (const Point& p : V) count += dot(u, p) > h + tol ? 1 : 0;
    return count;
  };

  std::vector<double> angles{0.0};
  for (const Point& p : V) {
    // Outside iff some edge line strictly separates p from the centre.
    bool outside = false;
    for (int i = 0; i < k; ++i) {
      const Point a = verts[i];
      const Point b = verts[(i + 1) % k];
      const Point e = b - a;
      const double len = norm(e);
      const double s = len > 0.0 ? cross(e, p - a) / len : norm(p - c);
      if (s > kBoundaryTolerance) outside = true;
    }
    if (P.r == 0.0) outside = norm(p - c) > kBoundaryTolerance;
    if (!outside) continue;
    const double psi = std::atan2(p.x - c.x, p.y - c.y);
    if (P.r == 0.0) {
      angles.push_back(psi - kPi / 2.0);
      angles.push_back(psi + kPi / 2.0);
      continue;
    }
    // A vertex is a point of tangency iff the line from p through it
    // supports the polygon.
    for (int i = 0; i < k; ++i) {
      const Point dir = verts[i] - p;
      double lo = 0.0;
      double hi = 0.0;
      for (const Point& v : verts) {
        const double s = cross(dir, v - p);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      const double slack = 1e-12 * norm(dir) * (P.r + 1.0);
      if (lo < -slack && hi > slack) continue;
      const double phi = std::atan2(dir.y, -dir.x);  // normal (dir.y, -dir.x)
      angles.push_back(phi);
      angles.push_back(phi + kPi);
    }
  }
  for (double& a : angles) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
  }
  std::sort(angles.begin(), angles.end());
  const long n = static_cast<long>(V.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double a = angles[i];
    const double b = i + 1 < angles.size() ? angles[i + 1] : angles[0] + kTwoPi;
    if (2 * beyond_count(a, 1e-9) >= n) return false;
    // Coincident angles bound no open interval.
    if (b - a > 1e-12 && 2 * beyond_count(0.5 * (a + b), 0.0) >= n) return false;
  }
  return true;
}

}  // namespace yolk
