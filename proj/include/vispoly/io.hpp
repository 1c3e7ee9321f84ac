#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vispoly/geometry.hpp"
#include "vispoly/polygon.hpp"
#include "vispoly/visibility.hpp"

namespace vispoly {

// Text format: line 1 holds n, lines 2..n+1 hold "x y". Errors name the line number.
std::vector<Point> parse_polygon(std::istream& in);
std::vector<Point> read_polygon_file(const std::string& path);
void write_polygon(std::ostream& out, const std::vector<Point>& pts);
void write_polygon_file(const std::string& path, const std::vector<Point>& pts);

// "x,y"
Point parse_viewpoint(const std::string& text);

struct SvgScene {
  const PolygonInput* input = nullptr;
  std::vector<Point> visibility;
  std::vector<Point> criticals;                  // effective critical vertices
  std::vector<std::pair<Point, Point>> windows;  // window segments
};

std::string render_svg(const SvgScene& scene);

// Process exit status for a failure: 2 degenerate position, 3 pipeline inconsistency, 1 otherwise.
int exit_code(ErrorKind kind);

// Stats as JSON; keys: n, c, c_effective, vertex_reads, flag_bits, scalar_slots_peak, wall_ms, engine, mode.
std::string stats_json(const RunStats& stats, double wall_ms, const std::string& engine);

}  // namespace vispoly
