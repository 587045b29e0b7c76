#include "doctest.h"
#include "polycensus/generators.hpp"
#include "polycensus/rigidity.hpp"
#include "polycensus/validity.hpp"

using namespace polycensus;

namespace {

PolyhedralGraph cube() {
  std::vector<std::vector<int>> nbrs(8);
  for (int c = 0; c < 4; ++c) {
    nbrs[c] = {c + 4, (c + 3) % 4, (c + 1) % 4};
    nbrs[c + 4] = {(c + 3) % 4 + 4, c, (c + 1) % 4 + 4};
  }
  return validate_polyhedral(Embedding::from_neighbor_lists(8, nbrs));
}

long long check_value(const IdentityReport& report, const std::string& name, bool lhs) {
  for (const IdentityCheck& c : report.checks)
    if (c.name == name) return lhs ? c.lhs : c.rhs;
  FAIL("missing check ", name);
  return -1;
}

}  // namespace

TEST_CASE("nontriangular_degree: tetrahedron vertices have none") {
  PolyhedralGraph g = pyramid(3);
  for (int v = 0; v < 4; ++v) CHECK(nontriangular_degree(g, v) == 0);
}

TEST_CASE("nontriangular_degree: every cube vertex meets 3 quadrilaterals") {
  PolyhedralGraph g = cube();
  for (int v = 0; v < 8; ++v) CHECK(nontriangular_degree(g, v) == 3);
}

TEST_CASE("nontriangular_degree: middle ring of the doubly stacked prism meets 4 quads") {
  PolyhedralGraph g = prism_stack(2);
  for (int v = 3; v < 6; ++v) CHECK(nontriangular_degree(g, v) == 4);
  for (int v : {0, 1, 2, 6, 7, 8}) CHECK(nontriangular_degree(g, v) == 2);
}

TEST_CASE("rigid_vertices: both 5-vertex polyhedra are totally rigid") {
  CHECK(rigid_vertices(pyramid(4)).size() == 5);
  CHECK(rigid_vertices(bipyramid(3)).size() == 5);
}

TEST_CASE("rigid_vertices: prism_stack(2) has 6 rigid and 3 non-rigid") {
  PolyhedralGraph g = prism_stack(2);
  CHECK(g.profile().rigid_count == 6);
  CHECK(g.profile().nonrigid_count == 3);
  CHECK(rigid_vertices(g) == std::vector<int>{0, 1, 2, 6, 7, 8});
}

TEST_CASE("profile: tetrahedron") {
  const GraphProfile& p = pyramid(3).profile();
  CHECK(p.v_k == std::map<int, int>{{3, 4}});
  CHECK(p.f_k == std::map<int, int>{{3, 4}});
  CHECK(p.rigid_count == 4);
  CHECK(p.totally_triangular == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("profile: 3-gonal bipyramid") {
  const GraphProfile& p = bipyramid(3).profile();
  CHECK(p.v_k == std::map<int, int>{{3, 2}, {4, 3}});
  CHECK(p.f_k == std::map<int, int>{{3, 6}});
  CHECK(p.rigid_count == 5);
}

TEST_CASE("profile: 4-gonal pyramid") {
  const GraphProfile& p = pyramid(4).profile();
  CHECK(p.v_k == std::map<int, int>{{3, 4}, {4, 1}});
  CHECK(p.f_k == std::map<int, int>{{3, 4}, {4, 1}});
  CHECK(p.rigid_count == 5);
}

TEST_CASE("check_identities: tetrahedron values") {
  IdentityReport report = check_identities(pyramid(3));
  CHECK(report.ok());
  CHECK(check_value(report, "v3_f3_identity", true) == 8);   // 4 + 4
  CHECK(check_value(report, "v3_f3_identity", false) == 8);  // 0 + 8
  CHECK(check_value(report, "f3_two_sided_bound", true) == 4);
  CHECK(check_value(report, "f3_two_sided_bound", false) == 4);
}

TEST_CASE("check_identities: pentagonal pyramid has V5 = F5 = 1") {
  IdentityReport report = check_identities(pyramid(5));
  CHECK(report.ok());
  CHECK(check_value(report, "v3_f3_identity", true) == 10);   // 5 + 5
  CHECK(check_value(report, "v3_f3_identity", false) == 10);  // 1 + 1 + 8
}

TEST_CASE("check_identities: cube parities") {
  IdentityReport report = check_identities(cube());
  CHECK(report.ok());
  CHECK(check_value(report, "v3_f3_identity", true) == 8);  // 8 + 0
  CHECK(check_value(report, "odd_parity", true) == 0);      // V3 = 8 even
  CHECK(check_value(report, "odd_parity", false) == 0);     // F3 = 0 even
}

TEST_CASE("regular_angle_feasible: four quadrilaterals reach exactly 2*pi") {
  PolyhedralGraph g = prism_stack(2);
  AngleSum sum = regular_angle_feasible(g, 3);  // middle-ring vertex, faces (4,4,4,4)
  CHECK_FALSE(sum.feasible);
  CHECK(sum.num == 2);
  CHECK(sum.den == 1);
}

TEST_CASE("regular_angle_feasible: cube corner sums to 3*pi/2") {
  AngleSum sum = regular_angle_feasible(cube(), 0);
  CHECK(sum.feasible);
  CHECK(sum.num == 3);
  CHECK(sum.den == 2);
}

TEST_CASE("regular_angle_feasible: five triangles sum to 5*pi/3") {
  PolyhedralGraph g = bipyramid(5);
  AngleSum sum = regular_angle_feasible(g, 5);  // an apex, faces (3,3,3,3,3)
  CHECK(sum.feasible);
  CHECK(sum.num == 5);
  CHECK(sum.den == 3);
}
