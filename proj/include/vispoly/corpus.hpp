#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vispoly/polygon.hpp"

namespace vispoly {

struct NamedPolygon {
  std::string name;
  PolygonInput polygon;
};

PolygonInput unit_square();
// (0,0),(4,0),(4,4),(2.5,4),(2.5,3),(1.5,3),(1.5,4),(0,4) seen from (2,1).
PolygonInput notched_square();
// A second notch hidden behind the first one.
PolygonInput two_notch();
// Disc-like polygon with `teeth` rectangular notches pointing at q; arc vertices pad it to n.
PolygonInput comb(std::size_t teeth, std::size_t n = 0, double depth = 3.0);
// Spiral corridor seen from a point at polar angle viewpoint_phi along the corridor.
PolygonInput spiral(double turns = 3.0, std::size_t samples_per_turn = 24, double viewpoint_phi = 0.3);
PolygonInput random_convex(std::size_t n, std::uint64_t seed);

PolygonInput random_simple_polygon(std::size_t n, std::uint64_t seed);
Point random_interior_point(const std::vector<Point>& vertices, std::uint64_t seed, double min_sep = 1e-6);

std::vector<NamedPolygon> fixed_corpus();

}  // namespace vispoly
