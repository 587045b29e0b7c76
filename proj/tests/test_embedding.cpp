#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "polycensus/embedding.hpp"
#include "polycensus/planar_code.hpp"

using namespace polycensus;

namespace {

Embedding tetrahedron() {
  return Embedding::from_neighbor_lists(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

// Standard cube rotation: ring 0..3 below ring 4..7.
Embedding cube() {
  std::vector<std::vector<int>> nbrs(8);
  for (int c = 0; c < 4; ++c) {
    nbrs[c] = {c + 4, (c + 3) % 4, (c + 1) % 4};
    nbrs[c + 4] = {(c + 3) % 4 + 4, c, (c + 1) % 4 + 4};
  }
  return Embedding::from_neighbor_lists(8, nbrs);
}

Embedding prism3() {
  return Embedding::from_neighbor_lists(
      6, {{3, 2, 1}, {4, 0, 2}, {5, 1, 0}, {5, 0, 4}, {3, 1, 5}, {4, 2, 3}});
}

Embedding pyramid4() {
  return Embedding::from_neighbor_lists(
      5, {{4, 3, 1}, {4, 0, 2}, {4, 1, 3}, {4, 2, 0}, {0, 1, 2, 3}});
}

Embedding bipyramid3() {
  return Embedding::from_neighbor_lists(
      5, {{3, 2, 4, 1}, {3, 0, 4, 2}, {3, 1, 4, 0}, {0, 1, 2}, {2, 1, 0}});
}

Embedding octahedron() {
  return Embedding::from_neighbor_lists(6, {{4, 3, 5, 1},
                                            {4, 0, 5, 2},
                                            {4, 1, 5, 3},
                                            {4, 2, 5, 0},
                                            {0, 1, 2, 3},
                                            {3, 2, 1, 0}});
}

std::vector<int> sorted_face_sizes(const Embedding& e) {
  FaceSet fs = trace_faces(e);
  std::vector<int> sizes;
  for (const Face& f : fs.faces) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("build_embedding: tetrahedron has 4 vertices and 12 darts") {
  Embedding e = tetrahedron();
  CHECK(e.vertex_count() == 4);
  CHECK(e.dart_count() == 12);
  CHECK(e.edge_count() == 6);
  for (int d = 0; d < e.dart_count(); ++d) {
    CHECK(e.origin(Embedding::opposite(d)) == e.target(d));
    CHECK(e.target(Embedding::opposite(d)) == e.origin(d));
  }
}

TEST_CASE("build_embedding: a single edge is well-formed") {
  Embedding e = Embedding::from_neighbor_lists(2, {{1}, {0}});
  CHECK(e.vertex_count() == 2);
  CHECK(e.dart_count() == 2);
}

TEST_CASE("build_embedding: mismatched adjacency is rejected") {
  CHECK_THROWS_AS(Embedding::from_neighbor_lists(2, {{1, 1}, {0}}), Error);
  try {
    Embedding::from_neighbor_lists(2, {{1, 1}, {0}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mismatched_adjacency);
  }
}

TEST_CASE("build_embedding: loops are rejected up front") {
  try {
    Embedding::from_neighbor_lists(2, {{0, 1}, {0}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::self_loop);
  }
}

TEST_CASE("trace_faces: tetrahedron has 4 triangles") {
  CHECK(sorted_face_sizes(tetrahedron()) == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("trace_faces: cube has 6 quadrilaterals") {
  CHECK(sorted_face_sizes(cube()) == std::vector<int>{4, 4, 4, 4, 4, 4});
}

TEST_CASE("trace_faces: 3-gonal prism has 2 triangles and 3 quadrilaterals") {
  CHECK(sorted_face_sizes(prism3()) == std::vector<int>{3, 3, 4, 4, 4});
}

TEST_CASE("trace_faces: every dart lies on exactly one face") {
  for (const Embedding& e : {tetrahedron(), cube(), prism3(), bipyramid3(), octahedron()}) {
    FaceSet fs = trace_faces(e);
    int total = 0;
    for (const Face& f : fs.faces) total += f.size();
    CHECK(total == e.dart_count());
    for (int d = 0; d < e.dart_count(); ++d) {
      const Face& f = fs.faces[fs.face_at(d)];
      CHECK(std::count(f.boundary.begin(), f.boundary.end(), d) == 1);
    }
  }
}

TEST_CASE("genus_check: tetrahedron and cube are spherical") {
  CHECK(genus_check(tetrahedron()));
  CHECK(genus_check(cube()));
}

TEST_CASE("genus_check: twisted K4 is a torus embedding with 2 faces") {
  // Vertex 3's rotation reversed relative to the planar one.  Traced by hand:
  // one 9-dart face and one triangle.
  Embedding e =
      Embedding::from_neighbor_lists(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {1, 2, 0}});
  CHECK_FALSE(genus_check(e));
  CHECK(sorted_face_sizes(e) == std::vector<int>{3, 9});
}

TEST_CASE("genus_check: disconnected input is an error") {
  Embedding e = Embedding::from_neighbor_lists(4, {{1}, {0}, {3}, {2}});
  CHECK_THROWS_AS(genus_check(e), Error);
}

TEST_CASE("dual: tetrahedron is self-dual") {
  CHECK(canonical_code(dual(tetrahedron())) == canonical_code(tetrahedron()));
}

TEST_CASE("dual: cube and octahedron are dual") {
  Embedding d = dual(cube());
  CHECK(d.vertex_count() == 6);
  CHECK(trace_faces(d).count() == 8);
  CHECK(canonical_code(d) == canonical_code(octahedron()));
  CHECK(canonical_code(dual(octahedron())) == canonical_code(cube()));
}

TEST_CASE("dual: 3-gonal prism and 3-gonal bipyramid are dual") {
  CHECK(canonical_code(dual(prism3())) == canonical_code(bipyramid3()));
}

TEST_CASE("dual: involution up to isomorphism and face sizes = degrees") {
  for (const Embedding& e : {tetrahedron(), cube(), prism3(), bipyramid3(), pyramid4()}) {
    Embedding d = dual(e);
    CHECK(genus_check(d));
    CHECK(canonical_code(dual(d)) == canonical_code(e));
    std::vector<int> dual_faces = sorted_face_sizes(d);
    std::vector<int> degrees;
    for (int v = 0; v < e.vertex_count(); ++v) degrees.push_back(e.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(dual_faces == degrees);
  }
}

TEST_CASE("canonical_code: invariant under relabeling") {
  std::mt19937 rng(20250810);
  for (const Embedding& e : {tetrahedron(), cube(), prism3(), bipyramid3(), octahedron()}) {
    CanonicalCode base = canonical_code(e);
    std::vector<int> perm(e.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_code(e.relabeled(perm)) == base);
    }
  }
}

TEST_CASE("canonical_code: invariant under mirroring") {
  for (const Embedding& e : {tetrahedron(), cube(), prism3(), bipyramid3(), pyramid4()})
    CHECK(canonical_code(e.mirrored()) == canonical_code(e));
}

TEST_CASE("canonical_code: the six named solids get six distinct codes") {
  std::vector<CanonicalCode> codes;
  for (const Embedding& e : {tetrahedron(), pyramid4(), bipyramid3(), cube(), octahedron(),
                             prism3()})
    codes.push_back(canonical_code(e));
  for (size_t i = 0; i < codes.size(); ++i)
    for (size_t j = i + 1; j < codes.size(); ++j) CHECK(codes[i] != codes[j]);
}

TEST_CASE("canonical_code: decode then re-encode is the identity") {
  for (const Embedding& e : {tetrahedron(), cube(), prism3(), bipyramid3(), octahedron()}) {
    CanonicalCode code = canonical_code(e);
    CHECK(canonical_code(decode(code)) == code);
  }
}

TEST_CASE("canonical_code: hex round trip") {
  CanonicalCode code = canonical_code(cube());
  CHECK(CanonicalCode::from_hex(code.hex()) == code);
}

TEST_CASE("planar_code: golden bytes for the tetrahedron") {
  std::vector<uint8_t> expected{4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0};
  CHECK(planar_code_bytes(tetrahedron()) == expected);
}

TEST_CASE("planar_code: binary stream round trip with header") {
  std::ostringstream sink;
  std::vector<Embedding> graphs{tetrahedron(), cube(), prism3()};
  write_planar_code(sink, graphs);
  std::string data = sink.str();
  CHECK(data.substr(0, 15) == kPlanarCodeHeader);
  std::istringstream source(data);
  std::vector<Embedding> loaded = read_planar_code(source);
  REQUIRE(loaded.size() == graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i)
    CHECK(canonical_code(loaded[i]) == canonical_code(graphs[i]));
}

TEST_CASE("ascii format: line round trip preserves rotations exactly") {
  for (const Embedding& e : {tetrahedron(), cube(), bipyramid3()}) {
    Embedding back = parse_ascii_line(ascii_line(e));
    CHECK(back.neighbor_lists() == e.neighbor_lists());
  }
}

TEST_CASE("read_graphs sniffs both formats") {
  {
    std::ostringstream sink;
    write_planar_code(sink, {cube()});
    std::istringstream source(sink.str());
    auto graphs = read_graphs(source);
    REQUIRE(graphs.size() == 1);
    CHECK(canonical_code(graphs[0]) == canonical_code(cube()));
  }
  {
    std::istringstream source(ascii_line(cube()) + "\n" + ascii_line(tetrahedron()) + "\n");
    auto graphs = read_graphs(source);
    REQUIRE(graphs.size() == 2);
    CHECK(canonical_code(graphs[1]) == canonical_code(tetrahedron()));
  }
}
