#pragma once

#include <cstddef>
#include <vector>

#include "vispoly/geometry.hpp"
#include "vispoly/polygon.hpp"

namespace vispoly {

// Append-only target handed to the algorithms; exposes no way to read back what was written.
class PointWriter {
 public:
  virtual ~PointWriter() = default;
  virtual void append(Point p) = 0;
};

// Owns the written sequence. The algorithm only ever sees it as a PointWriter.
class OutputSink final : public PointWriter {
 public:
  void append(Point p) override { points_.push_back(p); }
  std::vector<Point> take() && { return std::move(points_); }

 private:
  std::vector<Point> points_;
};

// Boundary arc from start to end (counterclockwise). start == end means the whole cycle.
struct Chain {
  std::size_t start = 0;
  std::size_t end = 0;
  CriticalKind start_kind = CriticalKind::NotCritical;
  CriticalKind end_kind = CriticalKind::NotCritical;
};

struct ChainWindow {
  Point a;
  Point b;
  double min1 = 0.0;
  double min2 = 0.0;
};

ChainWindow chain_window(const PolygonView& view, const Chain& chain);

struct EmitOptions {
  bool emit_start = true;
  bool emit_end = true;
};

// Two passes over the chain: the first locates the windows, the second writes the output.
void emit_chain_visibility(const PolygonView& view, const Chain& chain, PointWriter& sink,
                           EmitOptions options = {});

}  // namespace vispoly
