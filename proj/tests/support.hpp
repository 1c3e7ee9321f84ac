#pragma once

// Test-side oracles. They share nothing with the library beyond the Point type.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "vispoly/geometry.hpp"
#include "vispoly/polygon.hpp"

namespace vispoly::testing {

inline PolygonInput with_viewpoint(const PolygonInput& p, Point q) {
  return PolygonInput(std::vector<Point>(p.vertices().begin(), p.vertices().end()), q);
}

inline std::vector<Point> vertices_of(const PolygonInput& p) {
  return std::vector<Point>(p.vertices().begin(), p.vertices().end());
}

inline int exact_orient(Point a, Point b, Point c) {
  const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const mpq_class det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return sgn(det);
}

inline long double angle_of(Point q, Point p) {
  return std::atan2(static_cast<long double>(p.y) - q.y, static_cast<long double>(p.x) - q.x);
}

// Signed angle swept from a to b about q, in (-pi, pi].
inline long double sweep_angle(Point q, Point a, Point b) {
  long double d = angle_of(q, b) - angle_of(q, a);
  const long double pi = std::numbers::pi_v<long double>;
  while (d > pi) d -= 2 * pi;
  while (d <= -pi) d += 2 * pi;
  return d;
}

// +1 local maximum of the angle, -1 local minimum, 0 otherwise; atan2 based.
inline int angular_extremum(const PolygonInput& p, std::size_t i) {
  const std::size_t n = p.size();
  const Point q = p.viewpoint();
  const long double in = sweep_angle(q, p.vertex((i + n - 1) % n), p.vertex(i));
  const long double out = sweep_angle(q, p.vertex(i), p.vertex((i + 1) % n));
  if (in > 0 && out < 0) return 1;
  if (in < 0 && out > 0) return -1;
  return 0;
}

inline bool reflex(const PolygonInput& p, std::size_t i) {
  const std::size_t n = p.size();
  return exact_orient(p.vertex((i + n - 1) % n), p.vertex(i), p.vertex((i + 1) % n)) < 0;
}

inline CriticalKind independent_kind(const PolygonInput& p, std::size_t i) {
  if (!reflex(p, i)) return CriticalKind::NotCritical;
  switch (angular_extremum(p, i)) {
    case 1:
      return CriticalKind::CriticalMax;
    case -1:
      return CriticalKind::CriticalMin;
    default:
      return CriticalKind::NotCritical;
  }
}

// Angle of every boundary vertex, unwound along the traversal from `start`.
inline std::vector<long double> unwound_angles(const PolygonInput& p, std::size_t start) {
  const std::size_t n = p.size();
  std::vector<long double> out(n);
  long double acc = angle_of(p.viewpoint(), p.vertex(start));
  out[start] = acc;
  for (std::size_t s = 1; s < n; ++s) {
    const std::size_t prev = (start + s - 1) % n, cur = (start + s) % n;
    acc += sweep_angle(p.viewpoint(), p.vertex(prev), p.vertex(cur));
    out[cur] = acc;
  }
  return out;
}

inline double point_segment_distance(Point p, Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

inline double boundary_distance(const PolygonInput& p, Point x) {
  double best = INFINITY;
  for (std::size_t i = 0; i < p.size(); ++i) {
    best = std::min(best, point_segment_distance(x, p.vertex(i), p.vertex((i + 1) % p.size())));
  }
  return best;
}

// Visibility of a boundary point x with a margin: the segment from q to x (pulled back by a
// relative 1e-9) must not cross an edge transversally by more than eps = 1e-10 * scale on both
// sides. Grazing a reflex vertex on a window ray therefore counts as visible.
inline bool sees(const PolygonInput& p, Point x, double scale) {
  const Point q = p.viewpoint();
  const Point y{q.x + (1 - 1e-9) * (x.x - q.x), q.y + (1 - 1e-9) * (x.y - q.y)};
  const double eps = 1e-10 * scale;
  auto side = [](Point a, Point b, Point c) {
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) / len;
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point a = p.vertex(i), b = p.vertex((i + 1) % p.size());
    const double sa = side(q, y, a), sb = side(q, y, b);
    const double sq = side(a, b, q), sy = side(a, b, y);
    const bool straddle = (sa > eps && sb < -eps) || (sa < -eps && sb > eps);
    const bool across = (sq > eps && sy < -eps) || (sq < -eps && sy > eps);
    if (straddle && across) return false;
  }
  return true;
}

inline double signed_area(const std::vector<Point>& v) {
  long double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i], b = v[(i + 1) % v.size()];
    s += static_cast<long double>(a.x) * b.y - static_cast<long double>(b.x) * a.y;
  }
  return static_cast<double>(s / 2);
}

// Winding number of the closed polyline about x, with exact side tests.
inline int winding(const std::vector<Point>& v, Point x) {
  int w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point a = v[i], b = v[(i + 1) % v.size()];
    if (a.y <= x.y) {
      if (b.y > x.y && exact_orient(a, b, x) > 0) ++w;
    } else if (b.y <= x.y && exact_orient(a, b, x) < 0) {
      --w;
    }
  }
  return w;
}

// Quadratic simplicity check on exact signs: non-adjacent edges must be disjoint,
// adjacent edges may only share their common vertex.
inline bool simple_polygon(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  auto on_segment = [](Point a, Point b, Point p) {
    return exact_orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i], b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point c = v[j], d = v[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const int o1 = exact_orient(a, b, c), o2 = exact_orient(a, b, d);
      const int o3 = exact_orient(c, d, a), o4 = exact_orient(c, d, b);
      if (adjacent) {
        // Shared vertex; only a folded-back collinear overlap is a defect.
        const Point shared = j == i + 1 ? b : a;
        const Point other1 = shared == a ? b : a;
        const Point other2 = shared == c ? d : c;
        if (exact_orient(shared, other1, other2) == 0 &&
            (on_segment(shared, other1, other2) || on_segment(shared, other2, other1))) {
          return false;
        }
        continue;
      }
      if (o1 * o2 < 0 && o3 * o4 < 0) return false;
      if (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)) return false;
    }
  }
  return true;
}

}  // namespace vispoly::testing
