#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vispoly/geometry.hpp"
#include "vispoly/workspace.hpp"

namespace vispoly {

// Read-only cyclic vertex sequence (counterclockwise) with an interior viewpoint q.
class PolygonInput {
 public:
  PolygonInput(std::vector<Point> vertices, Point viewpoint);

  std::size_t size() const { return vertices_.size(); }
  Point viewpoint() const { return viewpoint_; }
  std::span<const Point> vertices() const { return vertices_; }
  Point vertex(std::size_t i) const { return vertices_[i]; }

 private:
  std::vector<Point> vertices_;
  Point viewpoint_;
};

// Metered access to a PolygonInput: every vertex access counts as one read.
class PolygonView {
 public:
  explicit PolygonView(const PolygonInput& input, WorkspaceMeter* meter = nullptr)
      : input_(&input), meter_(meter) {}

  std::size_t size() const { return input_->size(); }
  Point viewpoint() const { return input_->viewpoint(); }
  Point at(std::size_t i) const {
    if (meter_) ++meter_->vertex_reads;
    return input_->vertex(i);
  }
  WorkspaceMeter* meter() const { return meter_; }
  const PolygonInput& input() const { return *input_; }

 private:
  const PolygonInput* input_;
  WorkspaceMeter* meter_;
};

enum class CriticalKind { CriticalMax, CriticalMin, NotCritical };

// ReflexBoth: both kinds must be clockwise (reflex) turns.
// PaperLiteral: critical-max needs a clockwise turn, critical-min a counterclockwise one.
enum class TurnConvention { ReflexBoth, PaperLiteral };

void validate(const PolygonInput& input, bool strict);

bool point_in_polygon(const PolygonInput& input, Point p);

// +1 local maximum of the angle about q, -1 local minimum, 0 otherwise.
int local_extremum(Point q, Point before, Point v, Point after);

CriticalKind classify_window(Point q, Point before, Point v, Point after, TurnConvention conv);

CriticalKind classify_vertex(const PolygonView& view, std::size_t i,
                             TurnConvention conv = TurnConvention::ReflexBoth);
CriticalKind classify_vertex(const PolygonInput& input, std::size_t i,
                             TurnConvention conv = TurnConvention::ReflexBoth);

std::size_t critical_count(const PolygonView& view, TurnConvention conv = TurnConvention::ReflexBoth);
std::size_t critical_count(const PolygonInput& input, TurnConvention conv = TurnConvention::ReflexBoth);

// Strict angular order about q starting at the positive X-axis. Exact.
bool angle_less(Point q, Point a, Point b);

// Traverses the boundary one vertex at a time in either direction, keeping a three-vertex window
// so that each step costs one read.
class CycleWalker {
 public:
  CycleWalker(const PolygonView& view, std::size_t start, int step, TurnConvention conv);

  std::size_t index() const { return index_; }
  Point before() const { return before_; }
  Point point() const { return point_; }
  Point after() const { return after_; }
  // The vertex reached previously in traversal order.
  Point trailing() const { return step_ > 0 ? before_ : after_; }
  CriticalKind kind() const { return kind_; }
  bool critical() const { return kind_ != CriticalKind::NotCritical; }
  void advance();

 private:
  void reclassify();

  const PolygonView* view_;
  ScalarFrame frame_;
  std::size_t index_;
  int step_;
  TurnConvention conv_;
  Point before_, point_, after_;
  CriticalKind kind_ = CriticalKind::NotCritical;
};

}  // namespace vispoly
