#include "doctest.h"
#include "polycensus/validity.hpp"

using namespace polycensus;

namespace {

Embedding tetrahedron() {
  return Embedding::from_neighbor_lists(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

}  // namespace

TEST_CASE("check_simple: tetrahedron passes") {
  CHECK_FALSE(check_simple(tetrahedron()).has_value());
}

TEST_CASE("check_simple: parallel edges are flagged with the pair") {
  Embedding e = Embedding::from_neighbor_lists(2, {{1, 1}, {0, 0}});
  auto witness = check_simple(e);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::make_pair(0, 1));
}

TEST_CASE("check_three_connected: K4 passes, wheels pass") {
  CHECK_FALSE(check_three_connected(tetrahedron()).has_value());
  // wheel on 6 vertices: hub 5 joined to a 5-cycle
  std::vector<std::vector<int>> nbrs(6);
  nbrs[5] = {0, 1, 2, 3, 4};
  for (int i = 0; i < 5; ++i) nbrs[i] = {5, (i + 4) % 5, (i + 1) % 5};
  CHECK_FALSE(check_three_connected(Embedding::from_neighbor_lists(6, nbrs)).has_value());
}

TEST_CASE("check_three_connected: 4-cycle with a chord reports the chord endpoints") {
  // cycle 0-1-2-3 plus chord 0-2; vertices 1 and 3 have degree 2
  Embedding e = Embedding::from_neighbor_lists(4, {{1, 2, 3}, {0, 2}, {1, 0, 3}, {2, 0}});
  auto witness = check_three_connected(e);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::make_pair(0, 2));
}

TEST_CASE("check_three_connected: fewer than 4 vertices is an error") {
  Embedding e = Embedding::from_neighbor_lists(2, {{1}, {0}});
  try {
    check_three_connected(e);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::too_small);
  }
}

TEST_CASE("validate_polyhedral: tetrahedron validates with V=4, F=4") {
  PolyhedralGraph g = validate_polyhedral(tetrahedron());
  CHECK(g.vertex_count() == 4);
  CHECK(g.face_count() == 4);
  CHECK(g.edge_count() == 6);
}

TEST_CASE("validate_polyhedral: single edge fails with too-small and 3-connectivity") {
  Embedding e = Embedding::from_neighbor_lists(2, {{1}, {0}});
  try {
    validate_polyhedral(e);
    CHECK(false);
  } catch (const ValidationError& err) {
    bool too_small = false, three = false;
    for (const CheckResult& c : err.report().checks) {
      if (c.name == "min_size") too_small = !c.passed;
      if (c.name == "three_connected") three = !c.passed;
    }
    CHECK(too_small);
    CHECK(three);
  }
}

TEST_CASE("validate_polyhedral: twisted K4 fails the genus check") {
  Embedding e =
      Embedding::from_neighbor_lists(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {1, 2, 0}});
  try {
    validate_polyhedral(e);
    CHECK(false);
  } catch (const ValidationError& err) {
    bool genus = false;
    for (const CheckResult& c : err.report().checks)
      if (c.name == "genus" && !c.passed) genus = true;
    CHECK(genus);
  }
}

TEST_CASE("validate_polyhedral: accepted graphs satisfy the degree and face bounds") {
  PolyhedralGraph g = validate_polyhedral(tetrahedron());
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.embedding().degree(v) >= 3);
  for (const Face& f : g.faces().faces) CHECK(f.size() >= 3);
}

TEST_CASE("validate_polyhedral: dual of a polyhedral graph validates") {
  PolyhedralGraph g = validate_polyhedral(tetrahedron());
  CHECK_NOTHROW(validate_polyhedral(dual(g.embedding())));
}
