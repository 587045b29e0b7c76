#include "polycensus/reduction.hpp"

#include <algorithm>
#include <optional>

namespace polycensus {

namespace {

// Minimal rotation of the vertex sequence over both directions; the sort key
// that makes cycle order deterministic.
std::vector<int> cycle_canonical_form(const std::vector<int>& verts) {
  std::vector<int> best;
  int k = static_cast<int>(verts.size());
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> seq = verts;
    if (dir) std::reverse(seq.begin(), seq.end());
    for (int r = 0; r < k; ++r) {
      std::vector<int> rot(seq.begin() + r, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + r);
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

struct SplitResult {
  SeparatingCycle cycle;
  Embedding factor_first;
  Embedding factor_second;
  std::vector<int> map_first;   // factor vertex -> original vertex
  std::vector<int> map_second;
};

// Cuts the sphere along the cycle and builds both capped sides.  Returns
// nullopt when the cycle violates any separating-cycle condition; the caller
// still validates the factors as polyhedral graphs.
std::optional<SplitResult> cut_along(const PolyhedralGraph& g, const std::vector<int>& verts) {
  const Embedding& e = g.embedding();
  int k = static_cast<int>(verts.size());
  if (k < 3) return std::nullopt;

  std::vector<char> on_cycle(e.vertex_count(), 0);
  for (int v : verts) {
    if (v < 0 || v >= e.vertex_count() || on_cycle[v]) return std::nullopt;
    on_cycle[v] = 1;
  }
  for (int v : verts)
    if (e.degree(v) < 4) return std::nullopt;

  // Cycle darts: d[i] runs verts[i] -> verts[i+1].
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = e.dart_between(verts[i], verts[(i + 1) % k]);
    if (d[i] < 0) return std::nullopt;
  }

  // At each cycle vertex the rotation splits into the arc after the outgoing
  // dart (side A) and the arc after the incoming one (side B); both must be
  // nonempty so each side gets an edge at every vertex.
  constexpr int8_t kNone = 0, kSideA = 1, kSideB = 2;
  std::vector<int8_t> side(e.dart_count(), kNone);
  std::vector<std::vector<int32_t>> arc_a(k), arc_b(k);
  for (int i = 0; i < k; ++i) {
    int out = d[i];
    int back = Embedding::opposite(d[(i - 1 + k) % k]);
    int cur = e.rotation_next(out);
    while (cur != back) {
      if (cur == out) return std::nullopt;  // back dart missing: not a rotation
      arc_a[i].push_back(cur);
      side[cur] = kSideA;
      cur = e.rotation_next(cur);
    }
    cur = e.rotation_next(back);
    while (cur != out) {
      arc_b[i].push_back(cur);
      side[cur] = kSideB;
      cur = e.rotation_next(cur);
    }
    if (arc_a[i].empty() || arc_b[i].empty()) return std::nullopt;
  }

  // Flood each side across non-cycle vertices; a simple cycle on the sphere
  // always separates, so a contradiction means the candidate was not a cycle
  // of this embedding.
  std::vector<int8_t> vertex_side(e.vertex_count(), kNone);
  std::vector<int> stack;
  for (int i = 0; i < k; ++i) {
    for (int8_t which : {kSideA, kSideB}) {
      for (int32_t a : which == kSideA ? arc_a[i] : arc_b[i]) {
        int w = e.target(a);
        if (on_cycle[w]) {
          if (side[Embedding::opposite(a)] != which) return std::nullopt;
          continue;
        }
        if (vertex_side[w] == kNone) {
          vertex_side[w] = which;
          stack.push_back(w);
        } else if (vertex_side[w] != which) {
          return std::nullopt;
        }
      }
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int32_t dd : e.rotation(v)) {
      side[dd] = vertex_side[v];
      int w = e.target(dd);
      if (on_cycle[w]) {
        if (side[Embedding::opposite(dd)] != vertex_side[v]) return std::nullopt;
        continue;
      }
      if (vertex_side[w] == kNone) {
        vertex_side[w] = vertex_side[v];
        stack.push_back(w);
      } else if (vertex_side[w] != vertex_side[v]) {
        return std::nullopt;
      }
    }
  }

  SplitResult out;
  out.cycle.vertices = verts;
  for (int dd = 0; dd < e.dart_count(); ++dd) {
    if (side[dd] == kSideA) out.cycle.side_a.push_back(dd);
    if (side[dd] == kSideB) out.cycle.side_b.push_back(dd);
  }
  if (out.cycle.side_a.empty() || out.cycle.side_b.empty()) return std::nullopt;

  // Build one capped factor per side: cycle vertices first in cycle order,
  // interior vertices after, rotations restricted to the kept side.
  auto build_factor = [&](int8_t which, std::vector<int>& vmap) -> std::optional<Embedding> {
    std::vector<int> to_new(e.vertex_count(), -1);
    vmap.clear();
    for (int i = 0; i < k; ++i) {
      to_new[verts[i]] = i;
      vmap.push_back(verts[i]);
    }
    for (int v = 0; v < e.vertex_count(); ++v) {
      if (vertex_side[v] == which) {
        to_new[v] = static_cast<int>(vmap.size());
        vmap.push_back(v);
      }
    }
    std::vector<std::vector<int>> nbrs(vmap.size());
    for (int i = 0; i < k; ++i) {
      int out_dart = d[i];
      int back = Embedding::opposite(d[(i - 1 + k) % k]);
      std::vector<int>& row = nbrs[i];
      row.push_back(to_new[e.target(out_dart)]);
      if (which == kSideA) {
        for (int32_t a : arc_a[i]) row.push_back(to_new[e.target(a)]);
        row.push_back(to_new[e.target(back)]);
      } else {
        row.push_back(to_new[e.target(back)]);
        for (int32_t a : arc_b[i]) row.push_back(to_new[e.target(a)]);
      }
    }
    for (size_t vi = k; vi < vmap.size(); ++vi) {
      int v = vmap[vi];
      for (int32_t dd : e.rotation(v)) {
        int w = e.target(dd);
        if (to_new[w] < 0) return std::nullopt;
        nbrs[vi].push_back(to_new[w]);
      }
    }
    return Embedding::from_neighbor_lists(static_cast<int>(vmap.size()), nbrs);
  };

  auto fa = build_factor(kSideA, out.map_first);
  if (!fa) return std::nullopt;
  auto fb = build_factor(kSideB, out.map_second);
  if (!fb) return std::nullopt;
  out.factor_first = std::move(*fa);
  out.factor_second = std::move(*fb);
  return out;
}

std::optional<Decomposition> try_split(const PolyhedralGraph& g, const std::vector<int>& verts) {
  auto cut = cut_along(g, verts);
  if (!cut) return std::nullopt;
  try {
    PolyhedralGraph first = validate_polyhedral(cut->factor_first);
    PolyhedralGraph second = validate_polyhedral(cut->factor_second);
    // Cap faces: side A's cap contains the relabeled dart 0->1 along the
    // cycle; side B's cap runs the cycle backwards through 1->0.
    int cap_a = first.faces().face_at(first.embedding().dart_between(0, 1));
    int cap_b = second.faces().face_at(second.embedding().dart_between(1, 0));
    int k = static_cast<int>(verts.size());
    if (first.faces().faces[cap_a].size() != k || second.faces().faces[cap_b].size() != k)
      return std::nullopt;
    Decomposition dec{std::move(cut->cycle), std::move(first),   std::move(second),
                      cap_a,                 cap_b,              std::move(cut->map_first),
                      std::move(cut->map_second)};
    return dec;
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

// Every simple cycle in the subgraph induced by vertices of degree >= 4,
// each exactly once (rooted at its minimum vertex, direction fixed).
template <typename Visit>
void for_each_candidate_cycle(const PolyhedralGraph& g, Visit visit) {
  const Embedding& e = g.embedding();
  int n = e.vertex_count();
  std::vector<char> eligible(n, 0);
  for (int v = 0; v < n; ++v) eligible[v] = e.degree(v) >= 4;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    if (!eligible[v]) continue;
    for (int32_t d : e.rotation(v)) {
      int w = e.target(d);
      if (eligible[w]) adj[v].push_back(w);
    }
    std::sort(adj[v].begin(), adj[v].end());
  }

  std::vector<int> path;
  std::vector<char> used(n, 0);
  bool stop = false;

  auto dfs = [&](auto&& self, int v) -> void {
    if (stop) return;
    for (int w : adj[v]) {
      if (stop) return;
      if (w == path[0] && path.size() >= 3 && path[1] < path.back()) {
        if (!visit(path)) stop = true;
        continue;
      }
      if (w <= path[0] || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = 0;
    }
  };

  for (int s = 0; s < n && !stop; ++s) {
    if (!eligible[s]) continue;
    path.assign(1, s);
    used.assign(n, 0);
    used[s] = 1;
    dfs(dfs, s);
  }
}

}  // namespace

std::vector<SeparatingCycle> separating_cycles(const PolyhedralGraph& g) {
  std::vector<SeparatingCycle> out;
  for_each_candidate_cycle(g, [&](const std::vector<int>& verts) {
    if (auto dec = try_split(g, verts)) out.push_back(std::move(dec->cycle));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const SeparatingCycle& x, const SeparatingCycle& y) {
    if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
    return cycle_canonical_form(x.vertices) < cycle_canonical_form(y.vertices);
  });
  return out;
}

bool is_reducible(const PolyhedralGraph& g) {
  bool found = false;
  for_each_candidate_cycle(g, [&](const std::vector<int>& verts) {
    if (try_split(g, verts)) {
      found = true;
      return false;  // stop the search
    }
    return true;
  });
  return found;
}

Decomposition split_along(const PolyhedralGraph& g, const SeparatingCycle& c) {
  auto dec = try_split(g, c.vertices);
  if (!dec)
    throw Error(Errc::not_separating, "cycle does not separate into two polyhedral factors");
  return std::move(*dec);
}

std::vector<CanonicalCode> FactorTree::leaf_codes() const {
  std::vector<CanonicalCode> out;
  auto walk = [&](auto&& self, const FactorTree& t) -> void {
    if (t.irreducible) {
      out.push_back(t.code);
      return;
    }
    for (const FactorTree& child : t.children) self(self, child);
  };
  walk(walk, *this);
  std::sort(out.begin(), out.end());
  return out;
}

FactorTree factorize(const PolyhedralGraph& g) {
  FactorTree tree;
  tree.code = g.code();
  auto cycles = separating_cycles(g);
  if (cycles.empty()) {
    tree.irreducible = true;
    return tree;
  }
  Decomposition dec = split_along(g, cycles.front());
  tree.seam = dec.cycle.vertices;
  tree.children.push_back(factorize(dec.factor_first));
  tree.children.push_back(factorize(dec.factor_second));
  return tree;
}

PolyhedralGraph glue(const PolyhedralGraph& a, int face_first, const PolyhedralGraph& b,
                     int face_second, GlueMatching m) {
  if (face_first < 0 || face_first >= a.face_count() || face_second < 0 ||
      face_second >= b.face_count())
    throw Error(Errc::bad_input, "face index out of range");

  const Embedding& ea = a.embedding();
  const Face& f1 = a.faces().faces[face_first];
  int k = f1.size();

  Embedding eb = m.mirror ? b.embedding().mirrored() : b.embedding();
  FaceSet fsb = m.mirror ? trace_faces(eb) : b.faces();
  // Mirroring keeps dart ids; the mirrored counterpart of a face contains the
  // opposites of its darts.
  int fb_index = m.mirror ? fsb.face_at(Embedding::opposite(b.faces().faces[face_second].boundary[0]))
                          : face_second;
  const Face& f2 = fsb.faces[fb_index];
  if (f2.size() != k)
    throw Error(Errc::size_mismatch, "glued faces have sizes " + std::to_string(k) + " and " +
                                         std::to_string(f2.size()));

  // Boundary vertices in trace order and the flanking darts at each corner.
  std::vector<int> u(k), w(k);
  for (int i = 0; i < k; ++i) u[i] = ea.origin(f1.boundary[i]);
  for (int j = 0; j < k; ++j) w[j] = eb.origin(f2.boundary[j]);

  // Seam identification in reversed orientation: u[i] ~ w[(offset - i) mod k].
  auto wj_of = [&](int i) { return ((m.offset - i) % k + k) % k; };

  int na = ea.vertex_count();
  std::vector<int> b_to_new(eb.vertex_count(), -1);
  for (int i = 0; i < k; ++i) b_to_new[w[wj_of(i)]] = u[i];
  int next_id = na;
  for (int v = 0; v < eb.vertex_count(); ++v)
    if (b_to_new[v] < 0) b_to_new[v] = next_id++;

  std::vector<std::vector<int>> nbrs(next_id);
  std::vector<char> seam(na, 0);
  for (int i = 0; i < k; ++i) seam[u[i]] = 1;

  for (int v = 0; v < na; ++v) {
    if (seam[v]) continue;
    for (int32_t d : ea.rotation(v)) nbrs[v].push_back(ea.target(d));
  }
  for (int v = 0; v < eb.vertex_count(); ++v) {
    if (b_to_new[v] < na) continue;  // seam vertices handled below
    for (int32_t d : eb.rotation(v)) nbrs[b_to_new[v]].push_back(b_to_new[eb.target(d)]);
  }

  for (int i = 0; i < k; ++i) {
    int j = wj_of(i);
    int out1 = f1.boundary[i];
    int out2 = f2.boundary[j];
    std::vector<int>& row = nbrs[u[i]];
    // All of a's darts starting at the face corner, then b's fan strictly
    // between its corner darts; the two seam darts of b coincide with a's.
    int d = out1;
    for (int t = 0; t < ea.degree(u[i]); ++t) {
      row.push_back(ea.target(d));
      d = ea.rotation_next(d);
    }
    d = eb.rotation_next(out2);
    for (int t = 0; t < eb.degree(w[j]) - 2; ++t) {
      row.push_back(b_to_new[eb.target(d)]);
      d = eb.rotation_next(d);
    }
  }

  Embedding glued = Embedding::from_neighbor_lists(next_id, nbrs);
  if (auto dup = check_simple(glued))
    throw Error(Errc::not_simple, "identification doubles edge (" + std::to_string(dup->first) +
                                      "," + std::to_string(dup->second) + ")");
  try {
    return validate_polyhedral(glued);
  } catch (const ValidationError& err) {
    throw Error(Errc::not_polyhedral, err.report().summary());
  }
}

}  // namespace polycensus
