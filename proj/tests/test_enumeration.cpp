#include <algorithm>

#include "doctest.h"
#include "polycensus/enumeration.hpp"
#include "polycensus/generators.hpp"
#include "polycensus/oracle.hpp"
#include "polycensus/validity.hpp"

using namespace polycensus;

TEST_CASE("enumerate_polyhedral: counts up to 8 vertices") {
  EnumerationRun run = enumerate_polyhedral(8);
  CHECK(run.by_vertices[4].size() == 1);
  CHECK(run.by_vertices[5].size() == 2);
  CHECK(run.by_vertices[6].size() == 7);
  CHECK(run.by_vertices[7].size() == 34);
  CHECK(run.by_vertices[8].size() == 257);
}

TEST_CASE("enumerate_polyhedral: n=4 is exactly the tetrahedron") {
  EnumerationRun run = enumerate_polyhedral(4);
  REQUIRE(run.by_vertices[4].size() == 1);
  CHECK(run.by_vertices[4].code_at(0) == pyramid(3).code());
}

TEST_CASE("enumerate_polyhedral: n=5 is the 4-pyramid and the 3-bipyramid") {
  EnumerationRun run = enumerate_polyhedral(5);
  REQUIRE(run.by_vertices[5].size() == 2);
  CHECK(run.by_vertices[5].contains(pyramid(4).code()));
  CHECK(run.by_vertices[5].contains(bipyramid(3).code()));
}

TEST_CASE("enumerate_polyhedral: every enumerated code validates and round-trips") {
  EnumerationRun run = enumerate_polyhedral(7);
  for (int n = 4; n <= 7; ++n) {
    for (size_t i = 0; i < run.by_vertices[n].size(); ++i) {
      CanonicalCode code = run.by_vertices[n].code_at(i);
      PolyhedralGraph g = validate_polyhedral(decode(code));
      CHECK(g.vertex_count() == n);
      CHECK(g.code() == code);
    }
  }
}

TEST_CASE("enumerate_polyhedral: named solids appear") {
  EnumerationRun run = enumerate_polyhedral(9);
  CHECK(run.by_vertices[6].contains(prism_stack(1).code()));
  CHECK(run.by_vertices[6].contains(bipyramid(4).code()));
  CHECK(run.by_vertices[6].contains(pyramid(5).code()));
  CHECK(run.by_vertices[8].contains(bipyramid(6).code()));
  CHECK(run.by_vertices[9].contains(prism_stack(2).code()));
  CHECK(run.by_vertices[9].contains(pyramid(8).code()));
}

TEST_CASE("enumerate_polyhedral: dual closure of the (V,F) multiset") {
  EnumerationRun run = enumerate_polyhedral(9);
  for (int n = 4; n <= 9; ++n) {
    for (size_t i = 0; i < run.by_vertices[n].size(); ++i) {
      Embedding e = decode(run.by_vertices[n].code_at(i));
      Embedding d = dual(e);
      if (d.vertex_count() <= 9) {
        CHECK(run.by_vertices[d.vertex_count()].contains(canonical_code(d)));
      }
    }
  }
}

TEST_CASE("enumerate_polyhedral: deterministic across worker counts") {
  EnumerationRun one = enumerate_polyhedral(7, 1);
  EnumerationRun two = enumerate_polyhedral(7, 2);
  EnumerationRun four = enumerate_polyhedral(7, 4);
  for (int n = 4; n <= 7; ++n) {
    CHECK(one.by_vertices[n] == two.by_vertices[n]);
    CHECK(one.by_vertices[n] == four.by_vertices[n]);
  }
}

TEST_CASE("enumerate_polyhedral: every type with at least 5 vertices contracts into the set") {
  // The generation inverse: some edge contraction of every type lands one
  // vertex lower; spot-check by re-expanding instead, every (n-1)-type yields
  // at least one n-type child through the public glue/stellate surface is not
  // exhaustive, so check the counts against the oracle path instead.
  EnumerationRun run = enumerate_polyhedral(6);
  CodeSet expected = brute_force_oracle(6);
  CHECK(expected == run.by_vertices[6]);
}

TEST_CASE("enumerate_polyhedral: cap handling") {
  CHECK_THROWS_AS(enumerate_polyhedral(3), Error);
  try {
    enumerate_polyhedral(kSoftVertexCap + 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
}

TEST_CASE("brute_force_oracle: n=4 is exactly the tetrahedron") {
  CodeSet codes = brute_force_oracle(4);
  REQUIRE(codes.size() == 1);
  CHECK(codes.code_at(0) == pyramid(3).code());
}

TEST_CASE("brute_force_oracle: n=5 finds both polyhedra") {
  CodeSet codes = brute_force_oracle(5);
  REQUIRE(codes.size() == 2);
  CHECK(codes.contains(pyramid(4).code()));
  CHECK(codes.contains(bipyramid(3).code()));
}

TEST_CASE("brute_force_oracle: n=6 has the 7 known types") {
  CHECK(brute_force_oracle(6).size() == 7);
}

TEST_CASE("brute_force_oracle: range errors") {
  for (int bad : {3, 9}) {
    try {
      brute_force_oracle(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::out_of_oracle_range);
    }
  }
}

TEST_CASE("oracle equivalence: enumerator matches the oracle for n = 4..7") {
  EnumerationRun run = enumerate_polyhedral(7);
  for (int n = 4; n <= 7; ++n) {
    CodeSet expected = brute_force_oracle(n);
    CHECK(expected == run.by_vertices[n]);
  }
}
