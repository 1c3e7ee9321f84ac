#pragma once

#include <cstddef>
#include <vector>

#include "vispoly/polygon.hpp"
#include "vispoly/workspace.hpp"

namespace vispoly {

enum class Mode { StrictPaper, Validated };

const char* to_string(Mode mode);

// One bit per critical vertex; bit k is the k-th critical vertex met counterclockwise from start_index.
struct EffectiveFlags {
  FlagArray bits;
  std::size_t start_index = 0;
  std::size_t count_effective = 0;
  TurnConvention convention = TurnConvention::ReflexBoth;
  std::size_t merge_rounds = 0;  // diagnostic: refinement rounds run by merge_effective

  std::size_t size() const { return bits.size(); }
  bool test(std::size_t k) const { return bits.test(k); }
  void clear(std::size_t k) {
    if (bits.clear(k)) --count_effective;
  }
};

// Where the sweeps begin: the edge (edge, edge+1) holding the boundary point nearest q, which is
// always visible, and the bit index of the first critical vertex at or after edge+1.
struct SweepOrigin {
  std::size_t edge = 0;
  std::size_t first_bit = 0;
};

// Allocates c set bits addressed from start_vertex.
EffectiveFlags make_flags(const PolygonView& view, TurnConvention conv = TurnConvention::ReflexBoth);

std::size_t start_vertex(const PolygonView& view);

SweepOrigin sweep_origin(const PolygonView& view, const EffectiveFlags& flags);

void forward_sweep(const PolygonView& view, EffectiveFlags& flags, const SweepOrigin& origin);
void backward_sweep(const PolygonView& view, EffectiveFlags& flags, const SweepOrigin& origin);
void merge_effective(const PolygonView& view, EffectiveFlags& flags);

EffectiveFlags compute_effective(const PolygonView& view, Mode mode,
                                 TurnConvention conv = TurnConvention::ReflexBoth);

// Critical vertices whose flag disagrees with a whole-boundary segment visibility test.
// Quadratic and unmetered; this is the check behind Mode::Validated.
std::vector<std::size_t> find_discrepancies(const PolygonInput& input, const EffectiveFlags& flags);

// Boundary indices of the flagged critical vertices, counterclockwise from start_index. Unmetered helper.
std::vector<std::size_t> flagged_indices(const PolygonInput& input, const EffectiveFlags& flags);

}  // namespace vispoly
