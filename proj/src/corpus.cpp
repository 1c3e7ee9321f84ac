#include "vispoly/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "vispoly/errors.hpp"
#include "vispoly/oracle.hpp"

namespace vispoly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Point polar(double r, double a) { return {r * std::cos(a), r * std::sin(a)}; }

bool crosses(Point a, Point b, Point c, Point d) {
  const int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  // Touching or collinear contact also needs untangling.
  return (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) && (o1 * o2 <= 0 && o3 * o4 <= 0);
}

// Repeated 2-opt: reverse the path between two crossing edges until no crossing remains.
bool untangle(std::vector<Point>& p, std::size_t max_swaps) {
  const std::size_t n = p.size();
  std::size_t swaps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        const std::size_t j1 = (j + 1) % n;
        if (!crosses(p[i], p[i + 1], p[j], p[j1])) continue;
        std::reverse(p.begin() + static_cast<std::ptrdiff_t>(i + 1), p.begin() + static_cast<std::ptrdiff_t>(j + 1));
        changed = true;
        if (++swaps > max_swaps) return false;
      }
    }
  }
  return true;
}

}  // namespace

PolygonInput unit_square() { return PolygonInput({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0.5, 0.5}); }

PolygonInput notched_square() {
  return PolygonInput({{0, 0}, {4, 0}, {4, 4}, {2.5, 4}, {2.5, 3}, {1.5, 3}, {1.5, 4}, {0, 4}}, {2, 1});
}

PolygonInput two_notch() {
  return PolygonInput({{0, 0},
                       {10, 0},
                       {10, 10},
                       {7, 10},
                       {7, 4},
                       {6, 4},
                       {6, 10},
                       {5.5, 10},
                       {5.5, 8},
                       {4.5, 8},
                       {4.5, 10},
                       {0, 10}},
                      {8, 1});
}

PolygonInput comb(std::size_t teeth, std::size_t n, double depth) {
  if (teeth == 0) throw GeometryError(ErrorKind::DegenerateInput, "comb needs at least one tooth");
  if (n == 0) n = 8 * teeth;
  if (n < 4 * teeth) throw GeometryError(ErrorKind::DegenerateInput, "comb needs at least 4 vertices per tooth");
  const double radius = 10.0;
  const double half_width = 0.5;
  const double outer = std::sqrt(radius * radius - half_width * half_width);
  const double inner = radius - depth;
  const double spread = std::asin(half_width / radius);
  const std::size_t padding = n - 4 * teeth;

  std::vector<Point> v;
  v.reserve(n);
  for (std::size_t k = 0; k < teeth; ++k) {
    const double axis = kTwoPi * static_cast<double>(k) / static_cast<double>(teeth) + 0.1;
    const Point u{std::cos(axis), std::sin(axis)};
    const Point side{-u.y, u.x};
    v.push_back(outer * u - half_width * side);
    v.push_back(inner * u - half_width * side);
    v.push_back(inner * u + half_width * side);
    v.push_back(outer * u + half_width * side);
    // Arc points up to the next tooth.
    const std::size_t m = padding / teeth + (k < padding % teeth ? 1 : 0);
    const double from = axis + spread;
    const double to = axis + kTwoPi / static_cast<double>(teeth) - spread;
    for (std::size_t j = 1; j <= m; ++j) {
      v.push_back(polar(radius, from + (to - from) * static_cast<double>(j) / static_cast<double>(m + 1)));
    }
  }
  return PolygonInput(std::move(v), {0.0, 0.0});
}

PolygonInput spiral(double turns, std::size_t samples_per_turn, double viewpoint_phi) {
  const double a = 1.0;
  const double b = 0.5;
  const double width = 1.5;
  const double span = turns * kTwoPi;
  const auto samples = static_cast<std::size_t>(std::ceil(turns * static_cast<double>(samples_per_turn)));
  std::vector<Point> v;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double phi = span * static_cast<double>(i) / static_cast<double>(samples);
    v.push_back(polar(a + b * phi + width, phi));
  }
  for (std::size_t i = samples + 1; i-- > 0;) {
    const double phi = span * static_cast<double>(i) / static_cast<double>(samples);
    v.push_back(polar(a + b * phi, phi));
  }
  return PolygonInput(std::move(v), polar(a + b * viewpoint_phi + width / 2.0, viewpoint_phi));
}

PolygonInput random_convex(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw GeometryError(ErrorKind::DegenerateInput, "polygon needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rx = 1.0 + 9.0 * unit(rng);
  const double ry = 1.0 + 9.0 * unit(rng);
  const double tilt = kTwoPi * unit(rng);
  const Point centre{200.0 * unit(rng) - 100.0, 200.0 * unit(rng) - 100.0};
  std::vector<Point> v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTwoPi * (static_cast<double>(k) + 0.1 + 0.8 * unit(rng)) / static_cast<double>(n);
    const double x = rx * std::cos(t), y = ry * std::sin(t);
    v.push_back({centre.x + x * std::cos(tilt) - y * std::sin(tilt), centre.y + x * std::sin(tilt) + y * std::cos(tilt)});
  }
  const double s = 0.5 * unit(rng);
  const double a = kTwoPi * unit(rng);
  const Point q{centre.x + s * rx * std::cos(a) * std::cos(tilt) - s * ry * std::sin(a) * std::sin(tilt),
                centre.y + s * rx * std::cos(a) * std::sin(tilt) + s * ry * std::sin(a) * std::cos(tilt)};
  return PolygonInput(std::move(v), q);
}

Point random_interior_point(const std::vector<Point>& vertices, std::uint64_t seed, double min_sep) {
  double lo_x = vertices[0].x, hi_x = lo_x, lo_y = vertices[0].y, hi_y = lo_y;
  for (const Point& p : vertices) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> ux(lo_x, hi_x), uy(lo_y, hi_y);
  const PolygonInput shape(vertices, {0, 0});
  std::vector<double> angles(vertices.size());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Point q{ux(rng), uy(rng)};
    try {
      if (!point_in_polygon(shape, q)) continue;
    } catch (const GeometryError&) {
      continue;
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      angles[i] = std::atan2(vertices[i].y - q.y, vertices[i].x - q.x);
    }
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + kTwoPi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) gap = std::min(gap, angles[i] - angles[i - 1]);
    if (gap >= min_sep) return q;
  }
  throw GeometryError(ErrorKind::GenerationTimeout, "no interior point in general position");
}

PolygonInput random_simple_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw GeometryError(ErrorKind::DegenerateInput, "polygon needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Point> v(n);
    for (Point& p : v) p = {coord(rng), coord(rng)};
    if (!untangle(v, 50 * n * n + 1000)) continue;
    if (polygon_area(v) < 0.0) std::reverse(v.begin(), v.end());
    if (!is_simple(v)) continue;
    return PolygonInput(v, random_interior_point(v, seed, 1e-6));
  }
  throw GeometryError(ErrorKind::GenerationTimeout, "2-opt untangling did not converge");
}

std::vector<NamedPolygon> fixed_corpus() {
  std::vector<NamedPolygon> out;
  out.push_back({"unit-square", unit_square()});
  out.push_back({"notched-square", notched_square()});
  out.push_back({"two-notch", two_notch()});
  for (std::size_t t = 1; t <= 8; ++t) out.push_back({"comb-" + std::to_string(t), comb(t)});
  out.push_back({"spiral-2", spiral(2.0)});
  out.push_back({"spiral-3-mid", spiral(3.0, 24, 6.5)});
  out.push_back({"spiral-3-deep", spiral(3.0, 24, 10.0)});
  out.push_back({"spiral-4-deep", spiral(4.0, 40, 10.0)});
  return out;
}

}  // namespace vispoly
