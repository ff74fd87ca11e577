#pragma once

#include <vector>

#include "skelat/int_linalg.hpp"
#include "skelat/polytope.hpp"

// Exhaustive enumeration of reflexive polygons up to unimodular equivalence.
// The search scans vertex subsets of primitive lattice points inside a box;
// completeness is validated empirically by saturation checks (growing the
// box and the vertex-count cap leaves the class list unchanged).

namespace skelat {

struct PolygonClass {
  LatticePolytope representative;  // lex-least vertex list found in the box
  std::size_t vertex_count = 0;
  Int lambda0_index = 0;           // index of the vertex lattice in Z^2
};

/// All equivalence classes of reflexive polygons with vertices in
/// [-box, box]^2 and at most max_vertices vertices, in deterministic order
/// (vertex count, then vertex list).
std::vector<PolygonClass> enumerate_reflexive_polygons(Int box,
                                                       std::size_t max_vertices);

/// The production run: box [-3,3]^2, up to 6 vertices.  Yields the 16
/// classes; saturation at box 4 and 7 vertices is asserted in the tests.
std::vector<PolygonClass> enumerate_reflexive_polygons();

/// The classes whose vertex lattice is a proper sublattice of Z^2
/// (lambda0_index > 1); there are exactly three, with indices {2, 2, 3}.
std::vector<PolygonClass> figure1_polygons();

}  // namespace skelat
