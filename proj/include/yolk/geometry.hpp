#pragma once
/**
 * Regular k-gon geometry used by the yolk decision procedure.
 *
 * P_k(r, x, y) is the regular polygon with circumradius r centred at (x, y)
 * whose vertex 0 sits at the top-most point of the circumcircle. Vertices are
 * numbered clockwise.
 *
 * Directions around the polygon are measured as clockwise angles from "up"
 * (the +y axis), so that the unit vector for angle phi is (sin phi, cos phi).
 * Every predicate here is a sign test of the form "point p is left of / right
 * of a line whose direction is fixed and which passes through
 * (x, y) + r * v for a fixed vector v"; such predicates can optionally be
 * logged as critical hyperplanes in (r, x, y) space through a
 * ComparisonRecorder.
 */

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace yolk {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute signed-distance tolerance for "on the boundary" decisions.
inline constexpr double kBoundaryTolerance = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

// Positive when b is counterclockwise of a.
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

inline double norm(Point a) { return std::hypot(a.x, a.y); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Counterclockwise rotation by theta radians.
inline Point rotate(Point p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Clockwise angle of direction d measured from +y, in [0, 2*pi).
inline double clockwise_angle(Point d) {
  double a = std::atan2(d.x, d.y);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

inline Point direction_at(double clockwise) { return {std::sin(clockwise), std::cos(clockwise)}; }

/// Parameters of P_k(r, x, y).
struct PolygonParams {
  int k = 4;
  double r = 0.0;
  double x = 0.0;
  double y = 0.0;

  Point center() const { return {x, y}; }

  void validate() const {
    if (k < 3) throw std::invalid_argument("polygon needs at least 3 sides, got " + std::to_string(k));
    if (!std::isfinite(r) || !std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("polygon parameters must be finite");
    if (r < 0.0) throw std::invalid_argument("polygon circumradius must be non-negative");
  }
};

/// Vertex i of P_k(r, x, y); vertex 0 is the top-most one and indices advance clockwise.
inline Point polygon_vertex(const PolygonParams& P, int i) {
  P.validate();
  if (i < 0 || i >= P.k)
    throw std::out_of_range("vertex index " + std::to_string(i) + " outside [0, " + std::to_string(P.k) + ")");
  const double theta = kPi / 2.0 - kTwoPi * i / P.k;
  return {P.x + P.r * std::cos(theta), P.y + P.r * std::sin(theta)};
}

// ---------------------------------------------------------------------------
// Critical hyperplanes

/// a*x + b*y + c*r + d over the parameter space (r, x, y).
struct CriticalHyperplane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double evaluate(const PolygonParams& P) const { return a * P.x + b * P.y + c * P.r + d; }
};

enum class Side : std::int8_t { Below = -1, On = 0, Above = 1 };

inline Side side_of_value(double value, double tolerance) {
  if (value > tolerance) return Side::Above;
  if (value < -tolerance) return Side::Below;
  return Side::On;
}

/// Hyperplane whose sign tells whether p lies above the line of gradient g
/// through (x, y) + r * v.
inline CriticalHyperplane critical_hyperplane(double g, Point v, Point p) {
  return {g, -1.0, g * v.x - v.y, p.y - g * p.x};
}

inline Side hyperplane_side(const CriticalHyperplane& H, const PolygonParams& lambda,
                            double tolerance = kBoundaryTolerance) {
  return side_of_value(H.evaluate(lambda), tolerance);
}

struct TracedComparison {
  CriticalHyperplane plane;
  Side outcome = Side::On;
};

/**
 * Collects the parameter-dependent comparisons made while evaluating a
 * predicate. Each comparison "which side of the line through (x,y) + r*v with
 * direction dir is p on" is converted to a critical hyperplane in a frame
 * rotated counterclockwise by `frame_rotation`, chosen so that none of the
 * polygon's own edge or spoke directions is vertical there. The stored
 * coefficients are mapped back so they evaluate directly on the caller's
 * (r, x, y).
 */
class ComparisonRecorder {
 public:
  explicit ComparisonRecorder(double frame_rotation = 0.0)
      : rotation_(frame_rotation), cos_(std::cos(frame_rotation)), sin_(std::sin(frame_rotation)) {}

  double frame_rotation() const { return rotation_; }
  const std::vector<TracedComparison>& comparisons() const { return comparisons_; }
  void clear() { comparisons_.clear(); }

  // `orientation` is cross(direction, p - anchor) as computed by the caller,
  // where anchor = (x, y) + r * offset.
  void record(Point p, Point direction, Point offset, double orientation) {
    Point dir = turn(direction);
    if (dir.x < 0.0) {
      dir = -dir;
      orientation = -orientation;
    }
    // A direction that is exactly vertical in the rotated frame has no
    // gradient; these are measure-zero and are skipped rather than faked.
    if (dir.x == 0.0) {
      ++skipped_;
      return;
    }
    const double g = dir.y / dir.x;
    const CriticalHyperplane local = critical_hyperplane(g, turn(offset), turn(p));
    // local.a * x' + local.b * y' with (x', y') the rotated centre.
    CriticalHyperplane world{local.a * cos_ + local.b * sin_, -local.a * sin_ + local.b * cos_, local.c,
                             local.d};
    const Side outcome = orientation > 0.0 ? Side::Above : (orientation < 0.0 ? Side::Below : Side::On);
    comparisons_.push_back({world, outcome});
  }

  std::size_t skipped() const { return skipped_; }

 private:
  Point turn(Point p) const { return {cos_ * p.x - sin_ * p.y, sin_ * p.x + cos_ * p.y}; }

  double rotation_;
  double cos_;
  double sin_;
  std::vector<TracedComparison> comparisons_;
  std::size_t skipped_ = 0;
};

/// Frame rotation that keeps every spoke and edge direction of a k-gon away from vertical.
inline double trace_frame_rotation(int k) { return kPi / (2.0 * k); }

// ---------------------------------------------------------------------------
// The polygon itself

/**
 * P_k(r, x, y) together with the unit-polygon data (P_k(1, 0, 0)) that the
 * comparisons are phrased against. Construction is O(k).
 */
class RegularPolygon {
 public:
  explicit RegularPolygon(const PolygonParams& params) : params_(params) {
    params_.validate();
    const int k = params_.k;
    unit_vertices_.resize(k);
    vertices_.resize(k);
    edge_dirs_.resize(k);
    edge_normals_.resize(k);
    for (int i = 0; i < k; ++i) {
      const double theta = kPi / 2.0 - kTwoPi * i / k;
      unit_vertices_[i] = {std::cos(theta), std::sin(theta)};
      vertices_[i] = params_.center() + params_.r * unit_vertices_[i];
    }
    for (int i = 0; i < k; ++i) {
      const Point e = unit_vertices_[next(i)] - unit_vertices_[i];
      const double len = norm(e);
      edge_dirs_[i] = {e.x / len, e.y / len};
      edge_normals_[i] = {-edge_dirs_[i].y, edge_dirs_[i].x};
    }
    apothem_ = params_.r * std::cos(kPi / k);
  }

  const PolygonParams& params() const { return params_; }
  int sides() const { return params_.k; }
  double circumradius() const { return params_.r; }
  double apothem() const { return apothem_; }
  Point center() const { return params_.center(); }

  Point vertex(int i) const { return vertices_[i]; }
  Point unit_vertex(int i) const { return unit_vertices_[i]; }
  // Unit direction of the edge from vertex i to vertex i+1.
  Point edge_direction(int i) const { return edge_dirs_[i]; }
  // Unit outward normal of edge i.
  Point edge_normal(int i) const { return edge_normals_[i]; }

  int next(int i) const { return i + 1 == params_.k ? 0 : i + 1; }
  int wrap(int i) const {
    const int k = params_.k;
    i %= k;
    return i < 0 ? i + k : i;
  }

  // Signed distance of p beyond the line of edge i (positive = outer side).
  double edge_offset(Point p, int i, ComparisonRecorder* rec = nullptr) const {
    const double s = cross(edge_dirs_[i], p - vertices_[i]);
    if (rec) rec->record(p, edge_dirs_[i], unit_vertices_[i], s);
    return s;
  }

 private:
  PolygonParams params_;
  std::vector<Point> unit_vertices_;
  std::vector<Point> vertices_;
  std::vector<Point> edge_dirs_;
  std::vector<Point> edge_normals_;
  double apothem_ = 0.0;
};

// ---------------------------------------------------------------------------
// Subroutine 1: inside / boundary / outside

enum class Location { Inside, Boundary, Outside };

namespace detail {

// 0 for clockwise angles in [0, pi), 1 for [pi, 2*pi).
inline int half_of(Point d) {
  if (d.x > 0.0) return 0;
  if (d.x < 0.0) return 1;
  return d.y >= 0.0 ? 0 : 1;
}

// Does direction a come no later than b when sweeping clockwise from up?
inline bool clockwise_not_after(Point a, Point b) {
  const int ha = half_of(a);
  const int hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) <= 0.0;
}

struct Classification {
  Location location;
  int wedge;     // index i of the wedge (centre, v_i, v_{i+1}) containing p
  double offset; // signed distance beyond edge `wedge`
};

inline Classification classify(Point p, const RegularPolygon& poly, ComparisonRecorder* rec) {
  const int k = poly.sides();
  const Point c = poly.center();
  const Point d = p - c;
  const Point up{0.0, 1.0};
  const Point origin{0.0, 0.0};

  // Which half-plane of the vertical through the centre holds p.
  const double vertical = cross(up, d);
  if (rec) rec->record(p, up, origin, vertical);
  const int half_d = half_of(d);

  // Largest j whose spoke comes no later than d clockwise; spoke 0 always does.
  auto spoke_not_after = [&](int j) {
    const int half_j = 2 * j < k ? 0 : 1;
    if (half_j != half_d) return half_j < half_d;
    const Point u = poly.unit_vertex(j);
    const double s = cross(u, d);
    if (rec) rec->record(p, u, origin, s);
    return s <= 0.0;
  };
  int lo = 0;
  int hi = k - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (spoke_not_after(mid))
      lo = mid;
    else
      hi = mid - 1;
  }

  const double s = poly.edge_offset(p, lo, rec);
  Location where = Location::Inside;
  if (s > kBoundaryTolerance)
    where = Location::Outside;
  else if (s >= -kBoundaryTolerance)
    where = Location::Boundary;
  return {where, lo, s};
}

}  // namespace detail

/// O(log k) point location against the polygon.
inline Location classify_point(Point p, const RegularPolygon& poly, ComparisonRecorder* rec = nullptr) {
  return detail::classify(p, poly, rec).location;
}

inline Location classify_point(Point p, const PolygonParams& P) {
  return classify_point(p, RegularPolygon(P));
}

// ---------------------------------------------------------------------------
// Tangent vertices

/// Vertices touched by the two supporting lines from an outside point p,
/// labelled so that (entry, p, exit) is a clockwise triangle.
struct TangentPair {
  int entry_vertex = 0;
  int exit_vertex = 0;
  friend bool operator==(const TangentPair&, const TangentPair&) = default;
};

namespace detail {

inline TangentPair tangent_vertices(Point p, const RegularPolygon& poly, const Classification& cls,
                                    ComparisonRecorder* rec) {
  if (poly.circumradius() == 0.0) return {0, 0};
  const int k = poly.sides();
  const int start = cls.wedge;  // its edge faces p, so it is visible
  auto visible = [&](int edge) { return poly.edge_offset(p, poly.wrap(edge), rec) > kBoundaryTolerance; };

  // Visibility is monotone in the offset from `start` for offsets up to k/2.
  auto extent = [&](int step) {
    int lo = 0;
    int hi = k / 2;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (visible(start + step * mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  };
  const int first = poly.wrap(start - extent(-1));
  const int last = poly.wrap(start + extent(+1));

  // An edge collinear with p puts both of its endpoints on the tangent; take
  // the one met first going clockwise from vertex 0.
  auto on_edge_line = [&](int edge) {
    return std::abs(poly.edge_offset(p, edge, rec)) <= kBoundaryTolerance;
  };
  auto first_clockwise = [&](int edge) { return std::min(edge, poly.next(edge)); };

  TangentPair out{first, poly.next(last)};
  const int before = poly.wrap(first - 1);
  const int after = poly.next(last);
  if (on_edge_line(before)) out.entry_vertex = first_clockwise(before);
  if (on_edge_line(after)) out.exit_vertex = first_clockwise(after);
  return out;
}

}  // namespace detail

inline TangentPair tangent_vertices(Point p, const RegularPolygon& poly, ComparisonRecorder* rec = nullptr) {
  const auto cls = detail::classify(p, poly, rec);
  if (cls.location != Location::Outside)
    throw std::invalid_argument("tangent_vertices: point is not outside the polygon");
  return detail::tangent_vertices(p, poly, cls, rec);
}

inline TangentPair tangent_vertices(Point p, const PolygonParams& P) {
  return tangent_vertices(p, RegularPolygon(P));
}

/**
 * Clockwise angle of the outward normal of the tangent from p through the
 * given vertex. For the entry tangent the normal lies counterclockwise of
 * the direction centre->p, for the exit tangent clockwise of it.
 */
inline double tangent_normal_angle(Point p, const RegularPolygon& poly, int vertex, bool entry) {
  const Point d = p - poly.center();
  if (poly.circumradius() == 0.0) {
    const double psi = clockwise_angle(d);
    return entry ? psi - kPi / 2.0 : psi + kPi / 2.0;
  }
  const Point e = poly.vertex(vertex) - p;
  Point n{e.y, -e.x};
  const double support = dot(n, d);
  if (std::abs(support) > 1e-9 * norm(n) * norm(d)) {
    if (support < 0.0) n = -n;
  } else {
    // Nearly degenerate polygon: fall back to the rotation sense.
    const double turn = cross(d, n);
    if ((entry && turn < 0.0) || (!entry && turn > 0.0)) n = -n;
  }
  return std::atan2(n.x, n.y);
}

// ---------------------------------------------------------------------------
// Subroutine 2: clockwise order of the four tangents from p and q

enum class TangentId : std::uint8_t { PEntry, PExit, QEntry, QExit };

enum class Region : std::uint8_t { L, R, U, D };

struct TangentOrder {
  std::array<TangentId, 4> sequence;
  Region p_region;
  Region q_region;
};

namespace detail {

// Vertex touched by the supporting line with outward normal n.
inline int support_vertex(Point n, const RegularPolygon& poly) {
  // Edge normals are sorted by clockwise angle starting at pi/k; vertex m owns
  // the normal cone between edges m-1 and m.
  const int k = poly.sides();
  if (!clockwise_not_after(poly.edge_normal(0), n)) return 0;
  int lo = 0;
  int hi = k - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (clockwise_not_after(poly.edge_normal(mid), n))
      lo = mid;
    else
      hi = mid - 1;
  }
  return poly.next(lo);
}

inline TangentOrder tangent_order(Point p, Point q, const RegularPolygon& poly, ComparisonRecorder* rec) {
  using enum TangentId;
  // The two tangents parallel to pq touch vertices i and j; neither choice
  // depends on (r, x, y).
  const Point f = p - q;
  const Point right{f.y, -f.x};
  const int i = support_vertex(right, poly);
  const int j = support_vertex(-right, poly);
  const Point vi = poly.vertex(i);
  const Point vj = poly.vertex(j);
  const Point chord = poly.unit_vertex(j) - poly.unit_vertex(i);
  const double chord_up = cross(chord, f);

  auto region = [&](Point z) {
    const double ci = cross(f, z - vi);
    const double cj = cross(f, z - vj);
    if (rec) {
      rec->record(z, f, poly.unit_vertex(i), ci);
      rec->record(z, f, poly.unit_vertex(j), cj);
    }
    if (ci > 0.0 && cj > 0.0) return Region::L;
    if (ci < 0.0 && cj < 0.0) return Region::R;
    const double side = cross(chord, z - vi);
    if (rec) rec->record(z, chord, poly.unit_vertex(i), side);
    return (side > 0.0) == (chord_up > 0.0) ? Region::U : Region::D;
  };

  const Region rp = region(p);
  const Region rq = region(q);
  TangentOrder out{{PEntry, PExit, QEntry, QExit}, rp, rq};
  if (rp != rq) return out;  // p in U, q in D
  switch (rp) {
    case Region::L: out.sequence = {QEntry, PEntry, QExit, PExit}; break;
    case Region::R: out.sequence = {PEntry, QEntry, PExit, QExit}; break;
    case Region::U: out.sequence = {PEntry, QEntry, QExit, PExit}; break;
    case Region::D: out.sequence = {QEntry, PEntry, PExit, QExit}; break;
  }
  return out;
}

}  // namespace detail

/**
 * Relative clockwise order of the tangents from p and q. The sequence is
 * cyclic; it is returned in the form of the five-case table (region of p and
 * q w.r.t. the two tangents parallel to pq and the chord joining their
 * points of contact).
 */
inline TangentOrder tangent_order(Point p, Point q, const RegularPolygon& poly, ComparisonRecorder* rec = nullptr) {
  if (p == q) throw std::invalid_argument("tangent_order: points coincide");
  if (classify_point(p, poly) != Location::Outside || classify_point(q, poly) != Location::Outside)
    throw std::invalid_argument("tangent_order: both points must be strictly outside the polygon");
  return detail::tangent_order(p, q, poly, rec);
}

inline TangentOrder tangent_order(Point p, Point q, const PolygonParams& P) {
  return tangent_order(p, q, RegularPolygon(P));
}

}  // namespace yolk
