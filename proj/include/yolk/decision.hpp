#pragma once
/**
 * Decision procedure: does P_k(r, x, y) meet every median line of V?
 *
 * A tangent t rotates clockwise around the polygon; t+ is the open
 * half-plane beyond t. Every median line meets the polygon iff t+ holds
 * fewer than n/2 points for every position of t. Each point outside the
 * polygon enters t+ once and leaves it once per revolution, so the test is
 * a sweep over 2m sorted events (m = number of outside points), sorted with
 * merge sort using the four-tangent order of two points as comparator.
 *
 * Angles are clockwise angles of the tangent's outward normal, measured
 * from up. The sweep starts at t0, the horizontal tangent at the top vertex.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "yolk/detail/merge_sort.hpp"
#include "yolk/geometry.hpp"
#include "yolk/median_lines.hpp"

namespace yolk {

inline constexpr double kAngleTolerance = 1e-12;

enum class EventKind : std::uint8_t { Exit = 0, Enter = 1 };

struct SweepEvent {
  std::uint32_t point_index = 0;
  EventKind kind = EventKind::Enter;
  double angle_key = 0.0;  // in [0, 2*pi]; an exit at t0 itself is keyed 2*pi
};

struct DecisionTrace {
  std::vector<TracedComparison> comparisons;
  double frame_rotation = 0.0;
  bool verdict = false;
};

struct SweepSummary {
  bool verdict = false;
  std::size_t outside_points = 0;
  long initial_count = 0;
  long final_count = 0;
  long min_count = 0;
  long max_count = 0;
  std::vector<SweepEvent> events;
};

namespace detail {

struct EventRecord {
  Point p;
  double key;        // this event's angle
  double other_key;  // the same point's other event
  std::uint32_t point;
  EventKind kind;
  bool starts_inside;  // point lies in t0+
};

inline TangentId tangent_id(const EventRecord& e, bool as_p) {
  if (as_p) return e.kind == EventKind::Enter ? TangentId::PEntry : TangentId::PExit;
  return e.kind == EventKind::Enter ? TangentId::QEntry : TangentId::QExit;
}

class EventLess {
 public:
  EventLess(const RegularPolygon& poly, ComparisonRecorder* rec) : poly_(poly), rec_(rec) {}

  bool operator()(const EventRecord& a, const EventRecord& b) const {
    if (std::abs(a.key - b.key) <= kAngleTolerance) return tie_less(a, b);
    if (a.point == b.point || near_start(a.key) || near_start(b.key) || poly_.circumradius() == 0.0)
      return a.key < b.key;
    return order_less(a, b);
  }

 private:
  static bool near_start(double key) { return key <= kAngleTolerance || key >= kTwoPi - kAngleTolerance; }

  // Coincident tangents: exits first so a point on t is counted on neither side.
  static bool tie_less(const EventRecord& a, const EventRecord& b) {
    if (a.kind != b.kind) return a.kind == EventKind::Exit;
    if (a.point != b.point) return a.point < b.point;
    return false;
  }

  static double key_of(const EventRecord& e, TangentId id, bool as_p) {
    const bool enter = as_p ? id == TangentId::PEntry : id == TangentId::QEntry;
    return (e.kind == EventKind::Enter) == enter ? e.key : e.other_key;
  }

  // Linear order from t0 derived from the cyclic four-tangent order. The
  // position of t0 in that cycle is the gap whose membership pattern (which
  // of p, q lie in t+) matches the two points' membership in t0+.
  bool order_less(const EventRecord& a, const EventRecord& b) const {
    const auto order = detail::tangent_order(a.p, b.p, poly_, rec_).sequence;
    std::array<int, 4> pos{};
    for (int i = 0; i < 4; ++i) pos[static_cast<int>(order[i])] = i;
    auto covers = [&](TangentId entry, TangentId exit, int gap) {
      const int e = pos[static_cast<int>(entry)];
      const int x = pos[static_cast<int>(exit)];
      return (gap - e + 4) % 4 < (x - e + 4) % 4;
    };
    int chosen = -1;
    for (int gap = 0; gap < 4; ++gap) {
      if (covers(TangentId::PEntry, TangentId::PExit, gap) != a.starts_inside) continue;
      if (covers(TangentId::QEntry, TangentId::QExit, gap) != b.starts_inside) continue;
      if (chosen < 0) {
        chosen = gap;
        continue;
      }
      // Two gaps with the same membership hold the same count; pick the one
      // whose following tangent comes first.
      auto start_key = [&](int g) {
        const TangentId id = order[(g + 1) % 4];
        const bool is_p = id == TangentId::PEntry || id == TangentId::PExit;
        return is_p ? key_of(a, id, true) : key_of(b, id, false);
      };
      if (start_key(gap) < start_key(chosen)) chosen = gap;
    }
    if (chosen < 0) return a.key < b.key;
    const int start = chosen + 1;
    const int pa = (pos[static_cast<int>(tangent_id(a, true))] - start + 8) % 4;
    const int pb = (pos[static_cast<int>(tangent_id(b, false))] - start + 8) % 4;
    return pa < pb;
  }

  const RegularPolygon& poly_;
  ComparisonRecorder* rec_;
};

inline double normalize_entry(double angle) {
  angle = std::fmod(angle, kTwoPi);
  if (angle < 0.0) angle += kTwoPi;
  if (angle >= kTwoPi - kAngleTolerance) angle = 0.0;
  return angle;
}

inline double normalize_exit(double angle) {
  angle = std::fmod(angle, kTwoPi);
  if (angle < 0.0) angle += kTwoPi;
  if (angle <= kAngleTolerance) angle = kTwoPi;
  return angle;
}

struct PreparedSweep {
  std::vector<EventRecord> events;
  long initial_count = 0;
  std::size_t outside = 0;
};

inline PreparedSweep prepare_sweep(const RegularPolygon& poly, const PointSet& V, ComparisonRecorder* rec) {
  PreparedSweep out;
  out.events.reserve(2 * V.size());
  const Point top = poly.vertex(0);
  const Point horizontal{1.0, 0.0};
  const Point up{0.0, 1.0};
  for (std::uint32_t i = 0; i < V.size(); ++i) {
    const Point p = V[i];
    const auto cls = detail::classify(p, poly, rec);
    if (cls.location != Location::Outside) continue;
    ++out.outside;
    const double above = cross(horizontal, p - top);
    if (rec) rec->record(p, horizontal, up, above);
    const bool starts_inside = above > kBoundaryTolerance;
    if (starts_inside) ++out.initial_count;
    const TangentPair tp = detail::tangent_vertices(p, poly, cls, rec);
    const double enter = normalize_entry(tangent_normal_angle(p, poly, tp.entry_vertex, true));
    const double exit = normalize_exit(tangent_normal_angle(p, poly, tp.exit_vertex, false));
    out.events.push_back({p, enter, exit, i, EventKind::Enter, starts_inside});
    out.events.push_back({p, exit, enter, i, EventKind::Exit, starts_inside});
  }
  merge_sort(out.events, EventLess(poly, rec));
  return out;
}

inline SweepSummary run_sweep(const RegularPolygon& poly, const PointSet& V, ComparisonRecorder* rec,
                              bool keep_events = true) {
  PreparedSweep prep = prepare_sweep(poly, V, rec);
  const long n = static_cast<long>(V.size());
  SweepSummary s;
  s.outside_points = prep.outside;
  s.initial_count = prep.initial_count;
  long count = prep.initial_count;
  s.min_count = s.max_count = count;
  bool ok = 2 * count < n;
  const auto& ev = prep.events;
  if (keep_events) s.events.reserve(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    count += ev[i].kind == EventKind::Enter ? 1 : -1;
    s.min_count = std::min(s.min_count, count);
    s.max_count = std::max(s.max_count, count);
    if (keep_events) s.events.push_back({ev[i].point, ev[i].kind, ev[i].key});
    // Only test between distinct angles: inside a group of coincident events
    // the count is not that of any open half-plane.
    const bool group_ends = i + 1 == ev.size() || ev[i + 1].key > ev[i].key + kAngleTolerance;
    if (group_ends && 2 * count >= n) ok = false;
  }
  s.final_count = count;
  s.verdict = ok;
  return s;
}

}  // namespace detail

/// Outside points' enter/exit events in sweep order starting at t0.
inline std::vector<SweepEvent> sweep_events(const PointSet& V, const PolygonParams& P) {
  const RegularPolygon poly(P);
  const auto prep = detail::prepare_sweep(poly, V, nullptr);
  std::vector<SweepEvent> out;
  out.reserve(prep.events.size());
  for (const auto& e : prep.events) out.push_back({e.point, e.kind, e.key});
  return out;
}

/// Full sweep with counter diagnostics.
inline SweepSummary decide_detailed(const PolygonParams& P, const PointSet& V, DecisionTrace* trace = nullptr) {
  const RegularPolygon poly(P);
  if (!trace) return detail::run_sweep(poly, V, nullptr);
  ComparisonRecorder rec(trace_frame_rotation(P.k));
  SweepSummary s = detail::run_sweep(poly, V, &rec);
  trace->comparisons = rec.comparisons();
  trace->frame_rotation = rec.frame_rotation();
  trace->verdict = s.verdict;
  return s;
}

/// True iff P_k(r, x, y) (closed) intersects every median line of V.
inline bool decide(const PolygonParams& P, const PointSet& V) {
  return detail::run_sweep(RegularPolygon(P), V, nullptr, false).verdict;
}

inline bool decide(const PolygonParams& P, const PointSet& V, DecisionTrace& trace) {
  return decide_detailed(P, V, &trace).verdict;
}

}  // namespace yolk
