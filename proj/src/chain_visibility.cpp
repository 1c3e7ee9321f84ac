#include "vispoly/chain_visibility.hpp"

#include <cmath>

#include "vispoly/errors.hpp"

namespace vispoly {

namespace {

constexpr double kMatchTol = 1e-9;

std::size_t next_index(std::size_t i, std::size_t n) { return i + 1 == n ? 0 : i + 1; }

std::size_t edge_count(const Chain& chain, std::size_t n) {
  return chain.start == chain.end ? n : (chain.end + n - chain.start) % n;
}

bool incident(std::size_t edge, std::size_t vertex, std::size_t n) {
  return edge == vertex || next_index(edge, n) == vertex;
}

bool matches(double d, double target) { return std::abs(d - target) <= kMatchTol * target; }

Point window_point(Point q, Point p, Point a, Point b) {
  const auto hit = ray_hit(q, p, {a, b});
  if (!hit) throw GeometryError(ErrorKind::WindowNotFound, "window edge lost between passes");
  return hit->point;
}

// Suppresses consecutive repeats without reading the sink back.
class Emitter {
 public:
  explicit Emitter(PointWriter& sink) : sink_(sink) {}
  void put(Point p) {
    if (any_ && p == last_) return;
    sink_.append(p);
    last_ = p;
    any_ = true;
  }

 private:
  PointWriter& sink_;
  Point last_;
  bool any_ = false;
};

}  // namespace

ChainWindow chain_window(const PolygonView& view, const Chain& chain) {
  const std::size_t n = view.size();
  const Point q = view.viewpoint();
  ScalarFrame frame(view.meter(), 14);
  const bool seek_a = chain.start_kind == CriticalKind::CriticalMax;
  const bool seek_b = chain.end_kind == CriticalKind::CriticalMin;
  const Point ps = view.at(chain.start);
  const Point pe = chain.start == chain.end ? ps : view.at(chain.end);

  ChainWindow w{ps, pe, distance(q, ps), distance(q, pe)};
  bool found_a = false, found_b = false;
  const std::size_t count = edge_count(chain, n);
  Point a = ps;
  std::size_t k = chain.start;
  for (std::size_t s = 0; s < count; ++s, k = next_index(k, n)) {
    const Point b = s + 1 == count ? pe : view.at(next_index(k, n));
    if (seek_a && !incident(k, chain.start, n) && crosses_ray(q, ps, a, b)) {
      const double d = ray_param_distance(q, ps, a, b);
      if (!found_a || d < w.min1) {
        w.min1 = d;
        w.a = window_point(q, ps, a, b);
        found_a = true;
      }
    }
    if (seek_b && !incident(k, chain.end, n) && crosses_ray(q, pe, a, b)) {
      const double d = ray_param_distance(q, pe, a, b);
      if (!found_b || d < w.min2) {
        w.min2 = d;
        w.b = window_point(q, pe, a, b);
        found_b = true;
      }
    }
    a = b;
  }
  if (seek_a && !found_a) {
    throw GeometryError(ErrorKind::WindowNotFound, "no chain edge behind the chain start", {chain.start});
  }
  if (seek_b && !found_b) {
    throw GeometryError(ErrorKind::WindowNotFound, "no chain edge behind the chain end", {chain.end});
  }
  return w;
}

void emit_chain_visibility(const PolygonView& view, const Chain& chain, PointWriter& sink, EmitOptions options) {
  const ChainWindow window = chain_window(view, chain);
  const std::size_t n = view.size();
  const Point q = view.viewpoint();
  ScalarFrame frame(view.meter(), 13);
  const double min1 = window.min1;
  const double min2 = window.min2;
  const bool seek_b = chain.end_kind == CriticalKind::CriticalMin;
  bool seeking_a = chain.start_kind == CriticalKind::CriticalMax;

  Emitter out(sink);
  const Point ps = view.at(chain.start);
  const Point pe = chain.start == chain.end ? ps : view.at(chain.end);
  if (options.emit_start) out.put(ps);

  const std::size_t count = edge_count(chain, n);
  Point a = ps;
  std::size_t k = chain.start;
  for (std::size_t s = 0; s < count; ++s, k = next_index(k, n)) {
    const bool last = s + 1 == count;
    const Point b = last ? pe : view.at(next_index(k, n));
    if (seeking_a) {
      if (!incident(k, chain.start, n) && crosses_ray(q, ps, a, b) &&
          matches(ray_param_distance(q, ps, a, b), min1)) {
        out.put(window_point(q, ps, a, b));
        seeking_a = false;
      } else {
        a = b;
        continue;
      }
    }
    if (seek_b && !incident(k, chain.end, n) && crosses_ray(q, pe, a, b) &&
        matches(ray_param_distance(q, pe, a, b), min2)) {
      out.put(window_point(q, pe, a, b));
      if (options.emit_end) out.put(pe);
      return;
    }
    if (!last || options.emit_end) out.put(b);
    a = b;
  }
  if (seeking_a || seek_b) {
    throw GeometryError(ErrorKind::WindowNotFound, "window edge lost between passes", {chain.start, chain.end});
  }
}

}  // namespace vispoly
