#include "vispoly/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "vispoly/errors.hpp"

namespace vispoly {

namespace {

std::size_t next_index(std::size_t i, std::size_t n) { return i + 1 == n ? 0 : i + 1; }
std::size_t prev_index(std::size_t i, std::size_t n) { return i == 0 ? n - 1 : i - 1; }

bool on_closed_segment(Point a, Point b, Point p) {
  if (orient_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection test.
bool segments_meet(Point a, Point b, Point c, Point d) {
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_closed_segment(a, b, c) || on_closed_segment(a, b, d) || on_closed_segment(c, d, a) ||
         on_closed_segment(c, d, b);
}

long double signed_area2(std::span<const Point> v) {
  long double s = 0.0L;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[next_index(i, n)];
    s += static_cast<long double>(a.x) * b.y - static_cast<long double>(b.x) * a.y;
  }
  return s;
}

void check_simple(const PolygonInput& input) {
  const auto v = input.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[next_index(i, n)]) {
      throw GeometryError(ErrorKind::NotSimple, "repeated vertex", {i, next_index(i, n)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[next_index(i, n)];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point c = v[j];
      const Point d = v[next_index(j, n)];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint only; a fold back along the previous edge is a self-overlap.
        const Point shared = (j == i + 1) ? b : a;
        const Point other_i = (j == i + 1) ? a : b;
        const Point other_j = (j == i + 1) ? d : c;
        if (orient_sign(other_i, shared, other_j) == 0 && dot_sign(shared, other_i, shared, other_j) > 0) {
          throw GeometryError(ErrorKind::NotSimple, "adjacent edges overlap", {i, j});
        }
        continue;
      }
      if (segments_meet(a, b, c, d)) throw GeometryError(ErrorKind::NotSimple, "edges intersect", {i, j});
    }
  }
}

void check_general_position(const PolygonInput& input) {
  const auto v = input.vertices();
  const std::size_t n = v.size();
  const Point q = input.viewpoint();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient_sign(q, v[i], v[next_index(i, n)]) == 0) {
      throw GeometryError(ErrorKind::DegeneratePosition, "edge supporting line passes through viewpoint",
                          {i, next_index(i, n)});
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle_less(q, v[a], v[b]); });
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t a = order[k];
    const std::size_t b = order[k + 1];
    if (!angle_less(q, v[a], v[b])) {
      throw GeometryError(ErrorKind::DegeneratePosition, "vertices at equal angle about viewpoint",
                          {std::min(a, b), std::max(a, b)});
    }
  }
}

}  // namespace

PolygonInput::PolygonInput(std::vector<Point> vertices, Point viewpoint)
    : vertices_(std::move(vertices)), viewpoint_(viewpoint) {}

bool angle_less(Point q, Point a, Point b) {
  auto half = [&](Point p) { return (p.y > q.y || (p.y == q.y && p.x > q.x)) ? 0 : 1; };
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return orient_sign(q, a, b) > 0;
}

void validate(const PolygonInput& input, bool strict) {
  const std::size_t n = input.size();
  if (n < 3) throw GeometryError(ErrorKind::DegenerateInput, "polygon needs at least 3 vertices");
  const Point q = input.viewpoint();
  for (std::size_t i = 0; i < n; ++i) {
    if (input.vertex(i) == q) throw GeometryError(ErrorKind::DegeneratePosition, "vertex equals viewpoint", {i, i});
  }
  if (strict) check_simple(input);
  if (signed_area2(input.vertices()) <= 0.0L) {
    throw GeometryError(ErrorKind::NotCcw, "vertices are not in counterclockwise order", {0, n - 1});
  }
  bool inside = false;
  try {
    inside = point_in_polygon(input, q);
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::ViewpointOutside, "viewpoint lies on the boundary", e.indices());
  }
  if (!inside) throw GeometryError(ErrorKind::ViewpointOutside, "viewpoint is not strictly inside the polygon");
  if (strict) check_general_position(input);
}

bool point_in_polygon(const PolygonInput& input, Point p) {
  const auto v = input.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i];
    const Point b = v[next_index(i, n)];
    if (on_closed_segment(a, b, p)) {
      throw GeometryError(ErrorKind::DegeneratePosition, "point lies on the boundary", {i, next_index(i, n)});
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      // Upward edge: crossing lies right of p iff p is left of a->b.
      const int o = orient_sign(a, b, p);
      if ((b.y > a.y) ? o > 0 : o < 0) inside = !inside;
    }
  }
  return inside;
}

int local_extremum(Point q, Point before, Point v, Point after) {
  const int into = orient_sign(q, before, v);
  const int out = orient_sign(q, v, after);
  if (into == 0 || out == 0) {
    throw GeometryError(ErrorKind::DegeneratePosition, "vertex shares its angle with a neighbour");
  }
  if (into > 0 && out < 0) return 1;
  if (into < 0 && out > 0) return -1;
  return 0;
}

CriticalKind classify_window(Point q, Point before, Point v, Point after, TurnConvention conv) {
  const int ext = local_extremum(q, before, v, after);
  if (ext == 0) return CriticalKind::NotCritical;
  const int turn = orient_sign(before, v, after);
  if (ext > 0) return turn < 0 ? CriticalKind::CriticalMax : CriticalKind::NotCritical;
  const bool ok = conv == TurnConvention::ReflexBoth ? turn < 0 : turn > 0;
  return ok ? CriticalKind::CriticalMin : CriticalKind::NotCritical;
}

CriticalKind classify_vertex(const PolygonView& view, std::size_t i, TurnConvention conv) {
  const std::size_t n = view.size();
  try {
    return classify_window(view.viewpoint(), view.at(prev_index(i, n)), view.at(i), view.at(next_index(i, n)),
                           conv);
  } catch (const GeometryError& e) {
    throw GeometryError(e.kind(), "vertex shares its angle with a neighbour", {prev_index(i, n), i});
  }
}

CriticalKind classify_vertex(const PolygonInput& input, std::size_t i, TurnConvention conv) {
  return classify_vertex(PolygonView(input), i, conv);
}

std::size_t critical_count(const PolygonView& view, TurnConvention conv) {
  ScalarFrame frame(view.meter(), 2);
  std::size_t c = 0;
  CycleWalker w(view, 0, +1, conv);
  for (std::size_t k = 0; k < view.size(); ++k) {
    if (w.critical()) ++c;
    if (k + 1 < view.size()) w.advance();
  }
  return c;
}

std::size_t critical_count(const PolygonInput& input, TurnConvention conv) {
  return critical_count(PolygonView(input), conv);
}

CycleWalker::CycleWalker(const PolygonView& view, std::size_t start, int step, TurnConvention conv)
    : view_(&view), frame_(view.meter(), 11), index_(start), step_(step), conv_(conv) {
  const std::size_t n = view.size();
  before_ = view.at(prev_index(start, n));
  point_ = view.at(start);
  after_ = view.at(next_index(start, n));
  reclassify();
}

void CycleWalker::advance() {
  const std::size_t n = view_->size();
  if (step_ > 0) {
    index_ = next_index(index_, n);
    before_ = point_;
    point_ = after_;
    after_ = view_->at(next_index(index_, n));
  } else {
    index_ = prev_index(index_, n);
    after_ = point_;
    point_ = before_;
    before_ = view_->at(prev_index(index_, n));
  }
  reclassify();
}

void CycleWalker::reclassify() {
  try {
    kind_ = classify_window(view_->viewpoint(), before_, point_, after_, conv_);
  } catch (const GeometryError& e) {
    const std::size_t n = view_->size();
    throw GeometryError(e.kind(), "vertex shares its angle with a neighbour", {prev_index(index_, n), index_});
  }
}

}  // namespace vispoly
