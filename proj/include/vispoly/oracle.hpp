#pragma once

#include <cstddef>
#include <vector>

#include "vispoly/geometry.hpp"
#include "vispoly/polygon.hpp"

namespace vispoly {

// True iff the open segment q->p meets no boundary edge (edges through p only touch at p).
bool visible_from(const PolygonInput& input, Point p);

// Quadratic angular ray casting. Independent of the constrained pipeline.
std::vector<Point> brute_force_visibility(const PolygonInput& input);

// Boundary indices of critical vertices that are visible from q.
std::vector<std::size_t> visible_critical_indices(const PolygonInput& input,
                                                  TurnConvention conv = TurnConvention::ReflexBoth);

// Cyclic equality after dropping consecutive collinear points, pointwise within tol * diameter.
bool compare_cyclic(const std::vector<Point>& a, const std::vector<Point>& b, double tol);

// Consecutive-collinear removal used by compare_cyclic (triangle area < 1e-12 * diameter^2).
std::vector<Point> drop_collinear(const std::vector<Point>& pts);

double diameter(const std::vector<Point>& pts);

double polygon_area(const std::vector<Point>& pts);

bool is_simple(const std::vector<Point>& pts);

}  // namespace vispoly
