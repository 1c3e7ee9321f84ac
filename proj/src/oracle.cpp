#include "vispoly/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vispoly/errors.hpp"

namespace vispoly {

namespace {

std::size_t wrap(std::size_t i, std::size_t n) { return i % n; }

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient_sign(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point p = pts[i];
    while (k >= lower && orient_sign(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool on_segment(Point a, Point b, Point p) {
  return orient_sign(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool visible_from(const PolygonInput& input, Point p) {
  const auto v = input.vertices();
  const std::size_t n = v.size();
  const Point q = input.viewpoint();
  for (std::size_t i = 0; i < n; ++i) {
    if (segment_blocks(q, p, v[i], v[wrap(i + 1, n)])) return false;
  }
  return true;
}

std::vector<Point> brute_force_visibility(const PolygonInput& input) {
  const auto v = input.vertices();
  const std::size_t n = v.size();
  const Point q = input.viewpoint();
  std::vector<Segment> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back({v[i], v[wrap(i + 1, n)]});

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle_less(q, v[a], v[b]); });

  std::vector<Point> out;
  for (std::size_t i : order) {
    const Point p = v[i];
    if (!visible_from(input, p)) continue;
    const Point before = v[wrap(i + n - 1, n)];
    const Point after = v[wrap(i + 1, n)];
    const int ext = local_extremum(q, before, p, after);
    if (ext == 0 || orient_sign(before, p, after) >= 0) {
      out.push_back(p);
      continue;
    }
    const auto shadow = shadow_point(q, p, edges);
    if (!shadow) throw GeometryError(ErrorKind::DegeneratePosition, "reflex extremum without a shadow", {i});
    if (ext > 0) {
      out.push_back(p);
      out.push_back(shadow->point);
    } else {
      out.push_back(shadow->point);
      out.push_back(p);
    }
  }
  return out;
}

std::vector<std::size_t> visible_critical_indices(const PolygonInput& input, TurnConvention conv) {
  const auto v = input.vertices();
  const std::size_t n = v.size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    const CriticalKind k = classify_window(input.viewpoint(), v[wrap(i + n - 1, n)], v[i], v[wrap(i + 1, n)], conv);
    if (k != CriticalKind::NotCritical && visible_from(input, v[i])) out.push_back(i);
  }
  return out;
}

double diameter(const std::vector<Point>& pts) {
  const std::vector<Point> h = convex_hull(pts);
  if (h.size() < 2) return 0.0;
  if (h.size() == 2) return distance(h[0], h[1]);
  // Rotating calipers over the hull.
  const std::size_t m = h.size();
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = h[i];
    const Point b = h[(i + 1) % m];
    auto area = [&](std::size_t k) {
      const Point c = h[k % m];
      return std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    };
    while (area(j + 1) > area(j)) j = (j + 1) % m;
    best = std::max({best, distance(a, h[j % m]), distance(b, h[j % m])});
  }
  return best;
}

double polygon_area(const std::vector<Point>& pts) {
  long double s = 0.0L;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = pts[i];
    const Point b = pts[(i + 1) % n];
    s += static_cast<long double>(a.x) * b.y - static_cast<long double>(b.x) * a.y;
  }
  return static_cast<double>(s / 2.0L);
}

std::vector<Point> drop_collinear(const std::vector<Point>& pts) {
  const double d = diameter(pts);
  const double limit = 1e-12 * d * d;
  std::vector<Point> cur = pts;
  bool changed = true;
  while (changed && cur.size() > 3) {
    changed = false;
    std::vector<Point> next;
    next.reserve(cur.size());
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = next.empty() ? cur[(i + n - 1) % n] : next.back();
      const Point b = cur[i];
      const Point c = cur[(i + 1) % n];
      const double area2 = std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
      if (area2 / 2.0 < limit && n - (i - next.size()) > 3) {
        changed = true;
        continue;
      }
      next.push_back(b);
    }
    cur = std::move(next);
  }
  return cur;
}

bool compare_cyclic(const std::vector<Point>& a, const std::vector<Point>& b, double tol) {
  const std::vector<Point> x = drop_collinear(a);
  const std::vector<Point> y = drop_collinear(b);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  const double scale = std::max(diameter(a), diameter(b));
  const double eps = tol * scale;
  const std::size_t n = x.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (distance(x[0], y[r]) > eps) continue;
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) ok = distance(x[i], y[(r + i) % n]) <= eps;
    if (ok) return true;
  }
  return false;
}

bool is_simple(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i] == pts[(i + 1) % n]) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = pts[i], b = pts[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point c = pts[j], d = pts[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        const Point shared = j == i + 1 ? b : a;
        const Point u = j == i + 1 ? a : b;
        const Point w = j == i + 1 ? d : c;
        if (orient_sign(u, shared, w) == 0 && dot_sign(shared, u, shared, w) > 0) return false;
        continue;
      }
      const int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
      const int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
      if (o1 * o2 < 0 && o3 * o4 < 0) return false;
      if (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)) return false;
    }
  }
  return true;
}

}  // namespace vispoly
