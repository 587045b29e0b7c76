#include "polycensus/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <thread>

#include "polycensus/canonical.hpp"

namespace polycensus {

namespace {

constexpr int kMaxN = 8;

struct PairTable {
  int n = 0;
  int edges = 0;
  uint8_t u[28], v[28];
  uint32_t incidence[kMaxN];       // vertex -> edge-bit mask
  int8_t index[kMaxN][kMaxN];      // vertex pair -> edge bit

  explicit PairTable(int nn) : n(nn) {
    std::memset(incidence, 0, sizeof incidence);
    std::memset(index, -1, sizeof index);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        u[edges] = static_cast<uint8_t>(a);
        v[edges] = static_cast<uint8_t>(b);
        incidence[a] |= uint32_t(1) << edges;
        incidence[b] |= uint32_t(1) << edges;
        index[a][b] = index[b][a] = static_cast<int8_t>(edges);
        ++edges;
      }
    }
  }
};

bool connected_masks(const uint8_t adj[kMaxN], uint8_t all) {
  if (all == 0) return true;
  uint8_t frontier = all & static_cast<uint8_t>(-all);
  uint8_t seen = frontier;
  while (frontier) {
    uint8_t next = 0;
    uint8_t f = frontier;
    while (f) {
      int a = std::countr_zero(static_cast<unsigned>(f));
      f &= f - 1;
      next |= adj[a];
    }
    frontier = next & all & ~seen;
    seen |= frontier;
  }
  return seen == all;
}

bool three_connected_masks(const uint8_t adj[kMaxN], int n) {
  uint8_t full = static_cast<uint8_t>((1u << n) - 1);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      uint8_t keep = full & ~static_cast<uint8_t>((1u << a) | (1u << b));
      uint8_t masked[kMaxN];
      for (int w = 0; w < n; ++w) masked[w] = adj[w] & keep;
      if (!connected_masks(masked, keep)) return false;
    }
  }
  return true;
}

struct CycleList {
  // Peripheral candidates: vertex sequences plus the incident edge bits.
  std::vector<std::vector<uint8_t>> cycles;
};

// Planarity by Kelmans' criterion: a 3-connected graph is planar iff every
// edge lies on exactly two non-separating induced cycles, and those cycles
// are then precisely the face boundaries of its unique sphere embedding.
// Shares nothing with the rotation-system pipeline's face tracing.
bool peripheral_faces(const PairTable& pairs, const uint8_t adj[kMaxN], int n, int edge_count,
                      CycleList& out) {
  out.cycles.clear();
  uint8_t per_edge[28];
  std::memset(per_edge, 0, sizeof per_edge);
  uint8_t full = static_cast<uint8_t>((1u << n) - 1);

  std::vector<uint8_t> path;
  bool overfull = false;

  auto consider = [&](const std::vector<uint8_t>& cyc, uint8_t mask) {
    // induced: every cycle vertex sees exactly its two cycle neighbors
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      uint8_t expect = static_cast<uint8_t>((1u << cyc[(i + 1) % k]) | (1u << cyc[(i - 1 + k) % k]));
      if ((adj[cyc[i]] & mask) != expect) return;
    }
    // non-separating: the rest stays connected
    uint8_t rest = full & ~mask;
    if (rest) {
      uint8_t masked[kMaxN];
      for (int w = 0; w < n; ++w) masked[w] = adj[w] & rest;
      if (!connected_masks(masked, rest)) return;
    }
    for (int i = 0; i < k; ++i) {
      int e = pairs.index[cyc[i]][cyc[(i + 1) % k]];
      if (++per_edge[e] > 2) overfull = true;
    }
    out.cycles.push_back(cyc);
  };

  auto dfs = [&](auto&& self, int at, uint8_t onpath) -> void {
    if (overfull) return;
    uint8_t cand = adj[at];
    while (cand) {
      int w = std::countr_zero(static_cast<unsigned>(cand));
      cand &= cand - 1;
      if (w == path[0]) {
        if (path.size() >= 3 && path[1] < path.back()) consider(path, onpath);
        continue;
      }
      if (w <= path[0] || (onpath & (1u << w))) continue;
      path.push_back(static_cast<uint8_t>(w));
      self(self, w, static_cast<uint8_t>(onpath | (1u << w)));
      path.pop_back();
    }
  };

  for (int s = 0; s < n && !overfull; ++s) {
    path.assign(1, static_cast<uint8_t>(s));
    dfs(dfs, s, static_cast<uint8_t>(1u << s));
  }
  if (overfull) return false;

  for (int e = 0; e < pairs.edges; ++e) {
    bool present = (adj[pairs.u[e]] >> pairs.v[e]) & 1;
    if (present && per_edge[e] != 2) return false;
  }
  if (static_cast<int>(out.cycles.size()) != edge_count - n + 2)
    throw Error(Errc::invalid_graph, "peripheral cycle count violates Euler's formula");
  return true;
}

// Rebuilds the rotation system from the face set: orient the faces so each
// edge is traversed once per direction, then chain the directed corners.
void rotations_from_faces(const PairTable& pairs, const CycleList& faces, int n,
                          std::vector<uint8_t>& rot_flat, std::vector<int32_t>& begin) {
  int f = static_cast<int>(faces.cycles.size());
  std::vector<std::array<int, 2>> edge_faces(pairs.edges, {-1, -1});
  for (int i = 0; i < f; ++i) {
    const auto& cyc = faces.cycles[i];
    int k = static_cast<int>(cyc.size());
    for (int t = 0; t < k; ++t) {
      int e = pairs.index[cyc[t]][cyc[(t + 1) % k]];
      edge_faces[e][edge_faces[e][0] < 0 ? 0 : 1] = i;
    }
  }

  // dir[i] = +1 traverses the stored sequence forward, -1 backward.
  std::vector<int8_t> dir(f, 0);
  std::vector<int> stack{0};
  dir[0] = 1;
  auto traverses_forward = [&](int face, int a, int b) {
    const auto& cyc = faces.cycles[face];
    int k = static_cast<int>(cyc.size());
    for (int t = 0; t < k; ++t)
      if (cyc[t] == a && cyc[(t + 1) % k] == b) return true;
    return false;
  };
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const auto& cyc = faces.cycles[i];
    int k = static_cast<int>(cyc.size());
    for (int t = 0; t < k; ++t) {
      int a = cyc[t], b = cyc[(t + 1) % k];
      int e = pairs.index[a][b];
      int other = edge_faces[e][0] == i ? edge_faces[e][1] : edge_faces[e][0];
      // The neighbor face must traverse (a, b) opposite to this face.
      bool fwd_here = dir[i] > 0;
      bool other_fwd = traverses_forward(other, fwd_here ? a : b, fwd_here ? b : a) ? false : true;
      int8_t want = other_fwd ? 1 : -1;
      if (dir[other] == 0) {
        dir[other] = want;
        stack.push_back(other);
      } else if (dir[other] != want) {
        throw Error(Errc::invalid_graph, "face orientations conflict on the sphere");
      }
    }
  }

  // Directed corner (a -> w -> b) forces b right after a in w's rotation.
  int8_t next_at[kMaxN][kMaxN];
  std::memset(next_at, -1, sizeof next_at);
  uint8_t deg[kMaxN];
  std::memset(deg, 0, sizeof deg);
  for (int i = 0; i < f; ++i) {
    const auto& cyc = faces.cycles[i];
    int k = static_cast<int>(cyc.size());
    for (int t = 0; t < k; ++t) {
      int a = cyc[(t - 1 + k) % k], w = cyc[t], b = cyc[(t + 1) % k];
      if (dir[i] < 0) std::swap(a, b);
      next_at[w][a] = static_cast<int8_t>(b);
    }
  }

  begin.assign(n + 1, 0);
  rot_flat.clear();
  for (int w = 0; w < n; ++w) {
    int first = -1;
    for (int a = 0; a < n; ++a)
      if (next_at[w][a] >= 0) {
        first = a;
        break;
      }
    int a = first;
    do {
      rot_flat.push_back(static_cast<uint8_t>(a));
      ++deg[w];
      a = next_at[w][a];
      if (a < 0) throw Error(Errc::invalid_graph, "corner chain broken");
    } while (a != first);
    begin[w + 1] = begin[w] + deg[w];
  }
}

}  // namespace

CodeSet brute_force_oracle(int n, int workers) {
  if (n < 4 || n > kMaxN)
    throw Error(Errc::out_of_oracle_range, "oracle covers 4..8 vertices");
  workers = resolve_worker_count(workers);

  PairTable pairs(n);
  const uint32_t mask_end = uint32_t(1) << pairs.edges;
  const int min_edges = (3 * n + 1) / 2;
  const int max_edges = 3 * n - 6;

  std::vector<CodeSet> locals(workers);
  std::atomic<uint64_t> cursor{0};
  constexpr uint64_t kBlock = 1 << 16;

  auto work = [&](int wid) {
    CycleList faces;
    std::vector<uint8_t> rot_flat;
    std::vector<int32_t> begin;
    std::vector<uint8_t> code;
    CodeSet& out = locals[wid];
    while (true) {
      uint64_t lo = cursor.fetch_add(kBlock);
      if (lo >= mask_end) break;
      uint64_t hi = std::min<uint64_t>(mask_end, lo + kBlock);
      for (uint32_t mask = static_cast<uint32_t>(lo); mask < hi; ++mask) {
        int ec = std::popcount(mask);
        if (ec < min_edges || ec > max_edges) continue;
        bool deg_ok = true;
        for (int w = 0; w < n && deg_ok; ++w)
          deg_ok = std::popcount(mask & pairs.incidence[w]) >= 3;
        if (!deg_ok) continue;

        uint8_t adj[kMaxN];
        std::memset(adj, 0, sizeof adj);
        uint32_t bits = mask;
        while (bits) {
          int e = std::countr_zero(bits);
          bits &= bits - 1;
          adj[pairs.u[e]] |= static_cast<uint8_t>(1u << pairs.v[e]);
          adj[pairs.v[e]] |= static_cast<uint8_t>(1u << pairs.u[e]);
        }
        if (!connected_masks(adj, static_cast<uint8_t>((1u << n) - 1))) continue;
        if (!three_connected_masks(adj, n)) continue;
        if (!peripheral_faces(pairs, adj, n, ec, faces)) continue;

        rotations_from_faces(pairs, faces, n, rot_flat, begin);
        RotationView view{n, rot_flat.data(), begin.data()};
        canonical_code_bytes(view, code);
        out.append(code);
      }
    }
    out.sort_unique();
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }

  CodeSet merged;
  for (const CodeSet& local : locals)
    for (size_t i = 0; i < local.size(); ++i) merged.append(local.at(i));
  merged.sort_unique();
  return merged;
}

}  // namespace polycensus
