#pragma once
// Point-file parsing and writing, seeded instance generators and SVG output.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "yolk/geometry.hpp"
#include "yolk/median_lines.hpp"

namespace yolk::io {

/// Malformed point data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PointFormat { Csv, Json };

inline std::optional<PointFormat> format_from_name(const std::string& name) {
  if (name == "csv") return PointFormat::Csv;
  if (name == "json") return PointFormat::Json;
  return std::nullopt;
}

inline PointFormat format_from_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return PointFormat::Csv;
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == "json" ? PointFormat::Json : PointFormat::Csv;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& field, std::size_t line) {
  const std::string t = trim(field);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line) + ": '" + t + "' is not a number");
  }
  if (used != t.size()) throw InputError("line " + std::to_string(line) + ": '" + t + "' is not a number");
  if (!std::isfinite(v)) throw InputError("line " + std::to_string(line) + ": non-finite coordinate");
  return v;
}

}  // namespace detail

/// One `x,y` pair per line; `#` starts a comment; blank lines are ignored.
inline std::vector<Point> parse_csv(const std::string& text) {
  std::vector<Point> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
      throw InputError("line " + std::to_string(line) + ": expected 'x,y'");
    out.push_back({detail::parse_number(body.substr(0, comma), line), detail::parse_number(body.substr(comma + 1), line)});
  }
  return out;
}

/// A JSON array of [x, y] pairs.
inline std::vector<Point> parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("expected a JSON array of [x, y] pairs");
  std::vector<Point> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& e = doc[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw InputError("element " + std::to_string(i) + " is not an [x, y] pair");
    const Point p{e[0].get<double>(), e[1].get<double>()};
    if (!is_finite(p)) throw InputError("element " + std::to_string(i) + " has a non-finite coordinate");
    out.push_back(p);
  }
  return out;
}

inline std::vector<Point> parse_points(const std::string& text, PointFormat format) {
  return format == PointFormat::Json ? parse_json(text) : parse_csv(text);
}

/// Validates as a PointSet, converting its errors to InputError.
inline PointSet make_point_set(std::vector<Point> pts) {
  try {
    return PointSet(std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline PointSet load_points(const std::string& path, std::optional<PointFormat> format = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return make_point_set(parse_points(buf.str(), format.value_or(format_from_path(path))));
}

// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
  return nlohmann::json(v).dump();
}

inline std::string write_csv(std::span<const Point> pts, const std::string& header = {}) {
  std::string out = header;
  for (const Point& p : pts) out += format_double(p.x) + "," + format_double(p.y) + "\n";
  return out;
}

inline std::string write_json(std::span<const Point> pts) {
  nlohmann::json doc = nlohmann::json::array();
  for (const Point& p : pts) doc.push_back({p.x, p.y});
  return doc.dump() + "\n";
}

// ---------------------------------------------------------------------------
// Generators

inline const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"uniform", "gaussian", "grid", "collinear"};
  return names;
}

inline constexpr const char* kGeneratorEngine = "mt19937_64";

/**
 * n distinct points:
 *   uniform    unit square
 *   gaussian   standard normal in each coordinate
 *   grid       row-major integer grid of width ceil(sqrt(n)), lightly jittered
 *   collinear  on the line y = 0.5 x + 0.25, x uniform in [0, 1]
 */
inline std::vector<Point> generate(const std::string& name, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("generator needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::function<Point(std::size_t)> draw;
  if (name == "uniform") {
    draw = [&](std::size_t) { return Point{unit(rng), unit(rng)}; };
  } else if (name == "gaussian") {
    draw = [&](std::size_t) { return Point{gauss(rng), gauss(rng)}; };
  } else if (name == "grid") {
    const auto w = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    // The jitter keeps the instance away from the many exactly collinear
    // triples of a perfect grid.
    draw = [&, w](std::size_t i) {
      return Point{static_cast<double>(i % w) + 1e-3 * (unit(rng) - 0.5),
                   static_cast<double>(i / w) + 1e-3 * (unit(rng) - 0.5)};
    };
  } else if (name == "collinear") {
    draw = [&](std::size_t) {
      const double x = unit(rng);
      return Point{x, 0.5 * x + 0.25};
    };
  } else {
    throw std::invalid_argument("unknown generator '" + name + "'");
  }
  std::vector<Point> out;
  out.reserve(n);
  std::set<std::pair<double, double>> seen;
  for (std::size_t i = 0; out.size() < n; ++i) {
    const Point p = draw(out.size());
    if (seen.insert({p.x, p.y}).second) out.push_back(p);
    if (i > 100 * n + 1000) throw std::runtime_error("generator could not produce distinct points");
  }
  return out;
}

// ---------------------------------------------------------------------------
// SVG

/// The ball to draw: a polygon outline and, optionally, a circle.
struct BallShape {
  std::vector<Point> polygon;
  std::optional<std::pair<Point, double>> circle;
};

/// Points, the given lines clipped to the view, and the ball.
inline std::string render_svg(const PointSet& V, std::span<const Line> lines, const BallShape& ball) {
  double xmin = V[0].x, xmax = V[0].x, ymin = V[0].y, ymax = V[0].y;
  auto grow = [&](Point p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const Point& p : V) grow(p);
  for (const Point& p : ball.polygon) grow(p);
  if (ball.circle) {
    const auto [c, r] = *ball.circle;
    grow({c.x - r, c.y - r});
    grow({c.x + r, c.y + r});
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = 0.08 * span;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;
  const double size = 800.0;
  const double scale = size / std::max(xmax - xmin, ymax - ymin);
  auto sx = [&](double x) { return (x - xmin) * scale; };
  auto sy = [&](double y) { return (ymax - y) * scale; };  // SVG y grows downwards
  auto num = [](double v) {
    std::ostringstream o;
    o.precision(6);
    o << v;
    return o.str();
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((xmax - xmin) * scale) << "\" height=\""
      << num((ymax - ymin) * scale) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Line& l : lines) {
    // Intersect with the view box by parametrising along the line.
    const Point n = l.normal();
    const Point base = l.c * n;
    const Point dir{-n.y, n.x};
    const double reach = 2.0 * (std::abs(xmax - xmin) + std::abs(ymax - ymin) + norm(base));
    const Point a = base - reach * dir;
    const Point b = base + reach * dir;
    svg << "<line x1=\"" << num(sx(a.x)) << "\" y1=\"" << num(sy(a.y)) << "\" x2=\"" << num(sx(b.x)) << "\" y2=\""
        << num(sy(b.y)) << "\" stroke=\"#9ab\" stroke-width=\"0.7\"/>\n";
  }
  if (!ball.polygon.empty()) {
    svg << "<polygon points=\"";
    for (std::size_t i = 0; i < ball.polygon.size(); ++i)
      svg << (i ? " " : "") << num(sx(ball.polygon[i].x)) << "," << num(sy(ball.polygon[i].y));
    svg << "\" fill=\"#f4a\" fill-opacity=\"0.25\" stroke=\"#c06\" stroke-width=\"1.2\"/>\n";
  }
  if (ball.circle) {
    const auto [c, r] = *ball.circle;
    svg << "<circle cx=\"" << num(sx(c.x)) << "\" cy=\"" << num(sy(c.y)) << "\" r=\"" << num(r * scale)
        << "\" fill=\"none\" stroke=\"#06c\" stroke-width=\"1.2\"/>\n";
  }
  for (const Point& p : V)
    svg << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y)) << "\" r=\"3\" fill=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace yolk::io
