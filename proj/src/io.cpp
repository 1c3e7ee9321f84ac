#include "vispoly/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "vispoly/errors.hpp"

namespace vispoly {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw GeometryError(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

double parse_real(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    parse_fail(line, "invalid number '" + std::string(tok) + "'");
  }
  return v;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string svg_num(double v) {
  std::ostringstream s;
  s << std::setprecision(9) << v;
  return s.str();
}

}  // namespace

std::vector<Point> parse_polygon(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  if (!std::getline(in, text)) parse_fail(1, "missing vertex count");
  ++line;
  const std::string_view head = trim(text);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (head.empty() || ec != std::errc() || ptr != head.data() + head.size()) {
    parse_fail(line, "expected vertex count, got '" + std::string(head) + "'");
  }
  if (n < 3) parse_fail(line, "a polygon needs at least 3 vertices");

  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    if (!std::getline(in, text)) parse_fail(line + 1, "expected " + std::to_string(n) + " vertices, found " +
                                                          std::to_string(pts.size()));
    ++line;
    const std::string_view body = trim(text);
    const auto split = body.find_first_of(" \t");
    if (body.empty() || split == std::string_view::npos) parse_fail(line, "expected 'x y'");
    const std::string_view xs = body.substr(0, split);
    const std::string_view ys = trim(body.substr(split));
    if (ys.find_first_of(" \t") != std::string_view::npos) parse_fail(line, "expected exactly two numbers");
    pts.push_back({parse_real(xs, line), parse_real(ys, line)});
  }
  while (std::getline(in, text)) {
    ++line;
    if (!trim(text).empty()) parse_fail(line, "unexpected content after the last vertex");
  }
  return pts;
}

std::vector<Point> read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorKind::ParseError, "cannot open '" + path + "'");
  return parse_polygon(in);
}

void write_polygon(std::ostream& out, const std::vector<Point>& pts) {
  out << pts.size() << '\n';
  for (const Point& p : pts) out << fmt(p.x) << ' ' << fmt(p.y) << '\n';
}

void write_polygon_file(const std::string& path, const std::vector<Point>& pts) {
  std::ofstream out(path);
  if (!out) throw GeometryError(ErrorKind::ParseError, "cannot write '" + path + "'");
  write_polygon(out, pts);
}

Point parse_viewpoint(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw GeometryError(ErrorKind::ParseError, "viewpoint must be 'x,y', got '" + text + "'");
  }
  const std::string_view s(text);
  try {
    return {parse_real(trim(s.substr(0, comma)), 0), parse_real(trim(s.substr(comma + 1)), 0)};
  } catch (const GeometryError&) {
    throw GeometryError(ErrorKind::ParseError, "viewpoint must be 'x,y', got '" + text + "'");
  }
}

std::string render_svg(const SvgScene& scene) {
  const auto v = scene.input->vertices();
  double lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (const Point& p : v) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double w = hi_x - lo_x, h = hi_y - lo_y;
  const double mx = 0.05 * w, my = 0.05 * h;
  const double stroke = 0.004 * std::max(w, h);
  // SVG y grows downwards; mirror so the picture matches the math orientation.
  auto X = [&](double x) { return svg_num(x); };
  auto Y = [&](double y) { return svg_num(lo_y + hi_y - y); };
  auto path = [&](const std::vector<Point>& pts) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) d += (i ? " L " : "M ") + X(pts[i].x) + " " + Y(pts[i].y);
    return d + " Z";
  };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_num(lo_x - mx) << ' ' << svg_num(lo_y - my)
    << ' ' << svg_num(w + 2 * mx) << ' ' << svg_num(h + 2 * my) << "\">\n";
  s << "  <path class=\"boundary\" d=\"" << path({v.begin(), v.end()})
    << "\" fill=\"#eeeeee\" stroke=\"#333333\" stroke-width=\"" << svg_num(stroke) << "\"/>\n";
  s << "  <path class=\"visibility\" d=\"" << path(scene.visibility)
    << "\" fill=\"#ffd54f\" fill-opacity=\"0.7\" stroke=\"#e65100\" stroke-width=\"" << svg_num(stroke) << "\"/>\n";
  for (const auto& [a, b] : scene.windows) {
    s << "  <line class=\"window\" x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\""
      << Y(b.y) << "\" stroke=\"#1565c0\" stroke-width=\"" << svg_num(stroke) << "\"/>\n";
  }
  for (const Point& p : scene.criticals) {
    s << "  <circle class=\"critical\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << svg_num(3 * stroke)
      << "\" fill=\"#c62828\"/>\n";
  }
  const Point q = scene.input->viewpoint();
  s << "  <circle class=\"viewpoint\" cx=\"" << X(q.x) << "\" cy=\"" << Y(q.y) << "\" r=\"" << svg_num(4 * stroke)
    << "\" fill=\"#2e7d32\"/>\n";
  s << "</svg>\n";
  return s.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegeneratePosition:
      return 2;
    case ErrorKind::PipelineDiscrepancy:
    case ErrorKind::WindowNotFound:
      return 3;
    default:
      return 1;
  }
}

std::string stats_json(const RunStats& stats, double wall_ms, const std::string& engine) {
  nlohmann::ordered_json j;
  j["n"] = stats.n;
  j["c"] = stats.c;
  j["c_effective"] = stats.c_effective;
  j["vertex_reads"] = stats.meter.vertex_reads;
  j["flag_bits"] = stats.meter.flag_bits;
  j["scalar_slots_peak"] = stats.meter.scalar_slots_peak;
  j["wall_ms"] = wall_ms;
  j["engine"] = engine;
  j["mode"] = to_string(stats.mode);
  return j.dump(2) + "\n";
}

}  // namespace vispoly
