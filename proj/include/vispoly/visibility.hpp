#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vispoly/chain_visibility.hpp"
#include "vispoly/effective_critical.hpp"
#include "vispoly/errors.hpp"
#include "vispoly/polygon.hpp"
#include "vispoly/workspace.hpp"

namespace vispoly {

struct RunOptions {
  Mode mode = Mode::StrictPaper;
  TurnConvention convention = TurnConvention::ReflexBoth;
};

struct RunStats {
  std::size_t n = 0;
  std::size_t c = 0;
  std::size_t c_effective = 0;
  WorkspaceMeter meter;
  Mode mode = Mode::StrictPaper;
  std::size_t merge_rounds = 0;
  std::vector<std::size_t> discrepancies;
  bool partial_output = false;
};

// Raised when a run aborts; carries the statistics gathered up to the failure.
class RunError : public std::runtime_error {
 public:
  RunError(const GeometryError& cause, RunStats stats)
      : std::runtime_error(cause.what()), cause_(cause), stats_(std::move(stats)) {}
  const GeometryError& cause() const { return cause_; }
  ErrorKind kind() const { return cause_.kind(); }
  const RunStats& stats() const { return stats_; }

 private:
  GeometryError cause_;
  RunStats stats_;
};

RunStats visibility_polygon(const PolygonInput& input, PointWriter& sink, RunOptions options = {});

// Convenience wrapper: runs the constrained engine and returns the output sequence.
std::vector<Point> constrained_visibility(const PolygonInput& input, RunOptions options = {},
                                          RunStats* stats = nullptr);

}  // namespace vispoly
