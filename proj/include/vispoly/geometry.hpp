#pragma once

#include <optional>
#include <span>
#include <utility>

namespace vispoly {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

double distance(Point a, Point b);

struct PolarCoord {
  double theta = 0.0;  // [0, 2pi)
  double rho = 0.0;
};

enum class Orientation { CounterclockwiseTurn, ClockwiseTurn, Collinear };

struct Segment {
  Point a;
  Point b;
};

struct RayHit {
  Point point;
  double rho = 0.0;  // distance from the ray origin
};

// Exact sign of the determinant of (b - a, c - a): +1 left turn, -1 right turn, 0 collinear.
// Floating-point filter with a rational fallback, so the sign never flips by rounding.
int orient_sign(Point a, Point b, Point c);

// Exact sign of (b - a) . (d - c).
int dot_sign(Point a, Point b, Point c, Point d);

Orientation orientation(Point v1, Point v2, Point v3);

PolarCoord polar_of(Point q, Point p);

// Open ray {q + t (through - q), t > 0} against a closed segment.
std::optional<RayHit> ray_hit(Point q, Point through, const Segment& seg);

// Nearest ray hit strictly farther than |qv|; equal nearest distances on distinct edges are degenerate.
std::optional<RayHit> shadow_point(Point q, Point v, std::span<const Segment> edges);

// True iff the closed segments share a point other than `except` (the common endpoint of a
// segment pq and an edge through p). Collinear overlap raises DegeneratePosition.
bool segment_blocks(Point q, Point p, Point a, Point b);

// True iff q and p are strictly on opposite sides of line ab and a, b strictly on opposite sides of line qp.
bool proper_crossing(Point q, Point p, Point a, Point b);

// True iff the segment ab crosses the open ray from q through p transversally (endpoints strictly
// on opposite sides of the ray's line, crossing point on the ray side).
bool crosses_ray(Point q, Point p, Point a, Point b);

// Distance from q along the ray q->p to the supporting line of ab. Only meaningful after crosses_ray.
double ray_param_distance(Point q, Point p, Point a, Point b);

}  // namespace vispoly
