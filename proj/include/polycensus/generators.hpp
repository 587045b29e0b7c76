#pragma once

#include "polycensus/validity.hpp"

namespace polycensus {

/// Apex joined to an n-cycle: n+1 vertices, n triangles and one n-gon.
PolyhedralGraph pyramid(int n);

/// Two non-adjacent apexes joined to an n-cycle: n+2 vertices, 2n triangles.
PolyhedralGraph bipyramid(int n);

/// s 3-gonal prisms stacked along triangle faces: 3(s+1) vertices, 2 triangle
/// faces and 3s quadrilaterals.  Exactly 6 rigid vertices for every s.
PolyhedralGraph prism_stack(int s);

/// Adds a vertex inside triangular face f joined to its three corners; the new
/// vertex is totally triangular and 3-valent.  f indexes g.faces().
PolyhedralGraph stellate(const PolyhedralGraph& g, int face_index);

}  // namespace polycensus
