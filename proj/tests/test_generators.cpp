#include <algorithm>

#include "doctest.h"
#include "polycensus/generators.hpp"
#include "polycensus/reduction.hpp"

using namespace polycensus;

namespace {

std::vector<int> face_vector(const PolyhedralGraph& g) {
  std::vector<int> sizes;
  for (const Face& f : g.faces().faces) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("pyramid(3) is the tetrahedron") {
  PolyhedralGraph g = pyramid(3);
  CHECK(g.vertex_count() == 4);
  CHECK(face_vector(g) == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("pyramid(n): counts and profile") {
  for (int n = 3; n <= 8; ++n) {
    PolyhedralGraph g = pyramid(n);
    CHECK(g.vertex_count() == n + 1);
    CHECK(g.face_count() == n + 1);
    std::vector<int> expected(n, 3);
    expected.push_back(n);
    CHECK(face_vector(g) == expected);
  }
  CHECK(pyramid(5).profile().rigid_count == 6);
}

TEST_CASE("bipyramid(n): counts; bipyramid(4) is the octahedron") {
  for (int n = 3; n <= 8; ++n) {
    PolyhedralGraph g = bipyramid(n);
    CHECK(g.vertex_count() == n + 2);
    CHECK(g.face_count() == 2 * n);
    CHECK(face_vector(g) == std::vector<int>(2 * n, 3));
  }
  const GraphProfile& octa = bipyramid(4).profile();
  CHECK(octa.v_k == std::map<int, int>{{4, 6}});
}

TEST_CASE("generators reject undersized parameters") {
  for (auto bad : {0, 1, 2}) {
    CHECK_THROWS_AS(pyramid(bad), Error);
    CHECK_THROWS_AS(bipyramid(bad), Error);
  }
  CHECK_THROWS_AS(prism_stack(0), Error);
}

TEST_CASE("prism_stack(s): counts and the constant rigid count") {
  for (int s = 1; s <= 8; ++s) {
    PolyhedralGraph g = prism_stack(s);
    CHECK(g.vertex_count() == 3 * (s + 1));
    CHECK(g.face_count() == 3 * s + 2);
    std::vector<int> expected{3, 3};
    expected.insert(expected.end(), 3 * s, 4);
    std::vector<int> actual = face_vector(g);
    std::sort(expected.begin(), expected.end());
    CHECK(actual == expected);
    CHECK(g.profile().rigid_count == 6);
    CHECK(g.profile().nonrigid_count == 3 * (s - 1));
  }
}

TEST_CASE("pyramids are self-dual; the bipyramid dual is the prism") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(canonical_code(dual(pyramid(n).embedding())) == pyramid(n).code());
  }
  CHECK(canonical_code(dual(bipyramid(3).embedding())) == prism_stack(1).code());
}

TEST_CASE("stellate: tetrahedron becomes the 3-gonal bipyramid") {
  PolyhedralGraph tetra = pyramid(3);
  for (int f = 0; f < tetra.face_count(); ++f)
    CHECK(stellate(tetra, f).code() == bipyramid(3).code());
}

TEST_CASE("stellate: adds one vertex, two faces, three edges; new vertex is rigid") {
  PolyhedralGraph g = prism_stack(2);
  int f = 0;
  while (g.faces().faces[f].size() != 3) ++f;
  PolyhedralGraph out = stellate(g, f);
  CHECK(out.vertex_count() == g.vertex_count() + 1);
  CHECK(out.face_count() == g.face_count() + 2);
  CHECK(out.edge_count() == g.edge_count() + 3);
  int nv = out.vertex_count() - 1;
  CHECK(out.profile().nontri[nv] == 0);
  CHECK(out.embedding().degree(nv) == 3);
  CHECK(std::count(out.profile().totally_triangular.begin(),
                   out.profile().totally_triangular.end(), nv) == 1);
}

TEST_CASE("stellate on a rigid-cornered triangle raises the rigid count by exactly one") {
  PolyhedralGraph g = bipyramid(3);
  int before = g.profile().rigid_count;
  PolyhedralGraph out = stellate(g, 0);
  CHECK(out.profile().rigid_count == before + 1);
}

TEST_CASE("stellate rejects non-triangles") {
  PolyhedralGraph g = pyramid(4);
  int quad = 0;
  while (g.faces().faces[quad].size() != 4) ++quad;
  try {
    stellate(g, quad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_triangle);
  }
}
