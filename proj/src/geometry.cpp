#include "vispoly/geometry.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vispoly/errors.hpp"

namespace vispoly {

namespace {

constexpr double kEps = 0x1p-53;
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kDotBound = 8.0 * kEps;
constexpr double kTiny = 1e-280;  // below this the filter bound is unreliable (underflow)

int sign_of(const mpq_class& v) { return sgn(v); }

int orient_exact(Point a, Point b, Point c) {
  mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  mpq_class det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
  return sign_of(det);
}

int dot_exact(Point a, Point b, Point c, Point d) {
  mpq_class ux = mpq_class(b.x) - mpq_class(a.x);
  mpq_class uy = mpq_class(b.y) - mpq_class(a.y);
  mpq_class vx = mpq_class(d.x) - mpq_class(c.x);
  mpq_class vy = mpq_class(d.y) - mpq_class(c.y);
  mpq_class s = ux * vx + uy * vy;
  return sign_of(s);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

double cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

int orient_sign(Point a, Point b, Point c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  double detsum = 0.0;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign(det);
    detsum = -detleft - detright;
  } else {
    // detleft has an exactly zero factor (or underflowed); det is exact unless it is tiny.
    return std::abs(det) > kTiny ? sign(det) : orient_exact(a, b, c);
  }
  const double bound = kOrientBound * detsum;
  if ((det >= bound || -det >= bound) && detsum > kTiny) return sign(det);
  return orient_exact(a, b, c);
}

int dot_sign(Point a, Point b, Point c, Point d) {
  const double t1 = (b.x - a.x) * (d.x - c.x);
  const double t2 = (b.y - a.y) * (d.y - c.y);
  const double s = t1 + t2;
  const double mag = std::abs(t1) + std::abs(t2);
  if (std::abs(s) > kDotBound * mag && mag > kTiny) return sign(s);
  return dot_exact(a, b, c, d);
}

Orientation orientation(Point v1, Point v2, Point v3) {
  switch (orient_sign(v1, v2, v3)) {
    case 1:
      return Orientation::CounterclockwiseTurn;
    case -1:
      return Orientation::ClockwiseTurn;
    default:
      return Orientation::Collinear;
  }
}

PolarCoord polar_of(Point q, Point p) {
  if (p == q) throw GeometryError(ErrorKind::DegenerateInput, "polar_of: point coincides with viewpoint");
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  double theta = std::atan2(dy, dx);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  if (theta >= 2.0 * std::numbers::pi) theta = std::nextafter(2.0 * std::numbers::pi, 0.0);
  return {theta, std::hypot(dx, dy)};
}

std::optional<RayHit> ray_hit(Point q, Point through, const Segment& seg) {
  if (through == q) throw GeometryError(ErrorKind::DegenerateInput, "ray_hit: ray has no direction");
  const Point a = seg.a;
  const Point b = seg.b;
  const int sa = orient_sign(q, through, a);
  const int sb = orient_sign(q, through, b);
  auto on_ray = [&](Point x) { return dot_sign(q, through, q, x) > 0; };

  if (sa == 0 && sb == 0) {
    const bool a_ahead = on_ray(a);
    const bool b_ahead = on_ray(b);
    if (a_ahead || b_ahead) {
      throw GeometryError(ErrorKind::DegenerateInput, "ray_hit: segment collinear with ray");
    }
    return std::nullopt;
  }
  if (sa == 0) {
    if (!on_ray(a)) return std::nullopt;
    return RayHit{a, distance(q, a)};
  }
  if (sb == 0) {
    if (!on_ray(b)) return std::nullopt;
    return RayHit{b, distance(q, b)};
  }
  if (sa == sb) return std::nullopt;
  const int o = orient_sign(q, a, b);
  if (o != sb) return std::nullopt;

  const Point d = through - q;
  const Point e = b - a;
  double s = cross(q - a, d) / cross(e, d);
  s = std::clamp(s, 0.0, 1.0);
  const Point hit{a.x + s * e.x, a.y + s * e.y};
  return RayHit{hit, distance(q, hit)};
}

std::optional<RayHit> shadow_point(Point q, Point v, std::span<const Segment> edges) {
  std::optional<RayHit> best;
  bool tie = false;
  for (const Segment& e : edges) {
    auto hit = ray_hit(q, v, e);
    if (!hit) continue;
    // Strictly beyond v: decided exactly from the configuration, not from the rounded distance.
    bool beyond = false;
    if (hit->point == e.a || hit->point == e.b) {
      beyond = dot_sign(v, hit->point, q, v) > 0;
    } else {
      const int oq = orient_sign(e.a, e.b, q);
      const int ov = orient_sign(e.a, e.b, v);
      beyond = ov != 0 && ov == oq;
    }
    if (!beyond) continue;
    if (!best || hit->rho < best->rho) {
      tie = best && std::abs(best->rho - hit->rho) <= 1e-12 * hit->rho;
      best = hit;
    } else if (std::abs(hit->rho - best->rho) <= 1e-12 * best->rho) {
      tie = true;
    }
  }
  if (tie) throw GeometryError(ErrorKind::DegenerateInput, "shadow_point: two edges struck at equal distance");
  return best;
}

bool proper_crossing(Point q, Point p, Point a, Point b) {
  const int o1 = orient_sign(q, p, a);
  const int o2 = orient_sign(q, p, b);
  if (o1 * o2 >= 0) return false;
  const int o3 = orient_sign(a, b, q);
  const int o4 = orient_sign(a, b, p);
  return o3 * o4 < 0;
}

bool segment_blocks(Point q, Point p, Point a, Point b) {
  const int o1 = orient_sign(q, p, a);
  const int o2 = orient_sign(q, p, b);
  const int o3 = orient_sign(a, b, q);
  const int o4 = orient_sign(a, b, p);

  auto strictly_inside = [&](Point x) { return dot_sign(q, x, q, p) > 0 && dot_sign(p, x, p, q) > 0; };

  if (o1 == 0 && o2 == 0) {
    const Point d = p - q;
    const double len2 = d.x * d.x + d.y * d.y;
    const double ta = ((a.x - q.x) * d.x + (a.y - q.y) * d.y) / len2;
    const double tb = ((b.x - q.x) * d.x + (b.y - q.y) * d.y) / len2;
    const double lo = std::min(ta, tb);
    const double hi = std::max(ta, tb);
    const bool touches_only_p = (a == p || b == p) && lo >= 1.0;
    if (touches_only_p) return false;
    if (hi < 0.0 || lo > 1.0) return false;
    throw GeometryError(ErrorKind::DegeneratePosition, "segment overlaps viewing segment collinearly");
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o3 == 0 && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
      q.y <= std::max(a.y, b.y)) {
    throw GeometryError(ErrorKind::DegeneratePosition, "viewpoint lies on an edge");
  }
  if (o1 == 0 && a != p && strictly_inside(a)) return true;
  if (o2 == 0 && b != p && strictly_inside(b)) return true;
  return false;
}

bool crosses_ray(Point q, Point p, Point a, Point b) {
  const int sa = orient_sign(q, p, a);
  const int sb = orient_sign(q, p, b);
  if (sa * sb >= 0) return false;
  return orient_sign(q, a, b) == sb;
}

double ray_param_distance(Point q, Point p, Point a, Point b) {
  using ld = long double;
  const ld dx = ld(p.x) - q.x, dy = ld(p.y) - q.y;
  const ld ex = ld(b.x) - a.x, ey = ld(b.y) - a.y;
  const ld wx = ld(a.x) - q.x, wy = ld(a.y) - q.y;
  const ld t = (wx * ey - wy * ex) / (dx * ey - dy * ex);
  return static_cast<double>(t * std::sqrt(dx * dx + dy * dy));
}

}  // namespace vispoly
