#include "polycensus/generators.hpp"

#include <algorithm>

namespace polycensus {

namespace {

int mod(int a, int m) { return (a % m + m) % m; }

}  // namespace

PolyhedralGraph pyramid(int n) {
  if (n < 3) throw Error(Errc::too_small, "pyramid needs n >= 3");
  int apex = n;
  std::vector<std::vector<int>> nbrs(n + 1);
  for (int i = 0; i < n; ++i) nbrs[apex].push_back(i);
  for (int i = 0; i < n; ++i) nbrs[i] = {apex, mod(i - 1, n), mod(i + 1, n)};
  return validate_polyhedral(Embedding::from_neighbor_lists(n + 1, nbrs));
}

PolyhedralGraph bipyramid(int n) {
  if (n < 3) throw Error(Errc::too_small, "bipyramid needs n >= 3");
  int top = n, bottom = n + 1;
  std::vector<std::vector<int>> nbrs(n + 2);
  for (int i = 0; i < n; ++i) nbrs[top].push_back(i);
  for (int i = n - 1; i >= 0; --i) nbrs[bottom].push_back(i);
  for (int i = 0; i < n; ++i) nbrs[i] = {top, mod(i - 1, n), bottom, mod(i + 1, n)};
  return validate_polyhedral(Embedding::from_neighbor_lists(n + 2, nbrs));
}

PolyhedralGraph prism_stack(int s) {
  if (s < 1) throw Error(Errc::too_small, "prism_stack needs s >= 1");
  int n = 3 * (s + 1);
  auto id = [](int ring, int c) { return 3 * ring + c; };
  std::vector<std::vector<int>> nbrs(n);
  for (int r = 0; r <= s; ++r) {
    for (int c = 0; c < 3; ++c) {
      int prev = id(r, mod(c - 1, 3)), next = id(r, mod(c + 1, 3));
      if (r == 0)
        nbrs[id(r, c)] = {id(r + 1, c), prev, next};
      else if (r == s)
        nbrs[id(r, c)] = {prev, id(r - 1, c), next};
      else
        nbrs[id(r, c)] = {id(r + 1, c), prev, id(r - 1, c), next};
    }
  }
  return validate_polyhedral(Embedding::from_neighbor_lists(n, nbrs));
}

PolyhedralGraph stellate(const PolyhedralGraph& g, int face_index) {
  const FaceSet& fs = g.faces();
  if (face_index < 0 || face_index >= fs.count())
    throw Error(Errc::bad_input, "face index out of range");
  const Face& f = fs.faces[face_index];
  if (f.size() != 3) throw Error(Errc::not_triangle, "stellation needs a triangular face");

  const Embedding& e = g.embedding();
  int n = e.vertex_count();
  int nv = n;  // the new vertex
  auto nbrs = e.neighbor_lists();
  nbrs.emplace_back();

  // Boundary darts a->b, b->c, c->a.  At each corner the new edge is inserted
  // into the face's corner gap: right after the reversed incoming dart.  The
  // new vertex sees the corners in reversed boundary order.
  for (int i = 0; i < 3; ++i) {
    int32_t d = f.boundary[i];
    int u = e.origin(d);
    // position of d within u's rotation
    auto rot = e.rotation(u);
    size_t pos = 0;
    while (rot[pos] != d) ++pos;
    nbrs[u].insert(nbrs[u].begin() + static_cast<long>(pos), nv);
  }
  int a = e.origin(f.boundary[0]), b = e.origin(f.boundary[1]), c = e.origin(f.boundary[2]);
  nbrs[nv] = {a, c, b};
  return validate_polyhedral(Embedding::from_neighbor_lists(n + 1, nbrs));
}

}  // namespace polycensus
