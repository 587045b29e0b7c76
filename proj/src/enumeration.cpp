#include "polycensus/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "polycensus/canonical.hpp"

namespace polycensus {

namespace {
// Representation ceiling; the soft cap stays at kSoftVertexCap.
constexpr int kMaxEnumVertices = 20;
}

CanonicalCode CodeSet::code_at(size_t i) const {
  auto view = at(i);
  return CanonicalCode{{view.begin(), view.end()}};
}

bool CodeSet::contains(std::span<const uint8_t> code) const {
  size_t lo = 0, hi = size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    auto v = at(mid);
    if (std::lexicographical_compare(v.begin(), v.end(), code.begin(), code.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == size()) return false;
  auto v = at(lo);
  return std::equal(v.begin(), v.end(), code.begin(), code.end());
}

bool CodeSet::contains(const CanonicalCode& code) const {
  return contains(std::span<const uint8_t>(code.bytes));
}

void CodeSet::append(std::span<const uint8_t> code) {
  bytes_.insert(bytes_.end(), code.begin(), code.end());
  offsets_.push_back(static_cast<uint32_t>(bytes_.size()));
}

void CodeSet::sort_unique() {
  size_t count = size();
  std::vector<std::pair<uint32_t, uint32_t>> views(count);
  for (size_t i = 0; i < count; ++i) views[i] = {offsets_[i], offsets_[i + 1]};
  auto less = [&](const auto& a, const auto& b) {
    return std::lexicographical_compare(bytes_.begin() + a.first, bytes_.begin() + a.second,
                                        bytes_.begin() + b.first, bytes_.begin() + b.second);
  };
  auto eq = [&](const auto& a, const auto& b) {
    return std::equal(bytes_.begin() + a.first, bytes_.begin() + a.second,
                      bytes_.begin() + b.first, bytes_.begin() + b.second);
  };
  std::sort(views.begin(), views.end(), less);
  views.erase(std::unique(views.begin(), views.end(), eq), views.end());
  std::vector<uint8_t> bytes;
  bytes.reserve(bytes_.size());
  std::vector<uint32_t> offsets{0};
  offsets.reserve(views.size() + 1);
  for (const auto& v : views) {
    bytes.insert(bytes.end(), bytes_.begin() + v.first, bytes_.begin() + v.second);
    offsets.push_back(static_cast<uint32_t>(bytes.size()));
  }
  bytes_ = std::move(bytes);
  offsets_ = std::move(offsets);
}

int resolve_worker_count(int requested) {
  if (requested <= 0) {
    if (const char* env = std::getenv("POLYCENSUS_THREADS")) requested = std::atoi(env);
  }
  if (requested <= 0) requested = static_cast<int>(std::thread::hardware_concurrency());
  if (requested <= 0) requested = 1;
  return std::min(requested, 64);
}

namespace {

// Mutable rotation-system graph small enough for tight enumeration loops.
struct SmallGraph {
  int n = 0;
  uint8_t deg[kMaxEnumVertices];
  uint8_t rot[kMaxEnumVertices][kMaxEnumVertices];
  uint32_t adj[kMaxEnumVertices];

  void clear(int nn) {
    n = nn;
    std::memset(deg, 0, sizeof deg);
    std::memset(adj, 0, sizeof adj);
  }

  int edge_count() const {
    int darts = 0;
    for (int v = 0; v < n; ++v) darts += deg[v];
    return darts / 2;
  }

  void from_code(std::span<const uint8_t> code) {
    clear(code[0]);
    size_t pos = 1;
    for (int v = 0; v < n; ++v) {
      while (code[pos] != 0) {
        int w = code[pos++] - 1;
        rot[v][deg[v]++] = static_cast<uint8_t>(w);
        adj[v] |= uint32_t(1) << w;
      }
      ++pos;
    }
  }

  int position_of(int v, int w) const {
    for (int i = 0; i < deg[v]; ++i)
      if (rot[v][i] == w) return i;
    return -1;
  }

  void remove_edge(int x, int y) {
    auto drop = [&](int v, int w) {
      int p = position_of(v, w);
      std::memmove(rot[v] + p, rot[v] + p + 1, deg[v] - p - 1);
      --deg[v];
      adj[v] &= ~(uint32_t(1) << w);
    };
    drop(x, y);
    drop(y, x);
  }
};

thread_local std::vector<uint8_t> tls_rot_flat;
thread_local std::vector<int32_t> tls_begin;
thread_local std::vector<uint8_t> tls_code;

void canonical_of(const SmallGraph& g, std::vector<uint8_t>& out) {
  tls_rot_flat.clear();
  tls_begin.assign(g.n + 1, 0);
  for (int v = 0; v < g.n; ++v) {
    tls_begin[v + 1] = tls_begin[v] + g.deg[v];
    tls_rot_flat.insert(tls_rot_flat.end(), g.rot[v], g.rot[v] + g.deg[v]);
  }
  RotationView view{g.n, tls_rot_flat.data(), tls_begin.data()};
  canonical_code_bytes(view, out);
}

// After deleting edge (s, t) from a 3-connected graph, the remainder is
// 3-connected iff minimum degree stays >= 3 and s, t are joined by three
// internally disjoint paths: any new small cut would have to separate s
// from t.  Unit vertex capacities via node splitting, bitmask residual.
bool three_connected_after_deletion(const SmallGraph& g, int s, int t) {
  uint64_t res[2 * kMaxEnumVertices];
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  int nodes = 2 * g.n;
  std::memset(res, 0, sizeof(uint64_t) * nodes);
  for (int v = 0; v < g.n; ++v) {
    res[in(v)] |= uint64_t(1) << out(v);
    for (int i = 0; i < g.deg[v]; ++i) res[out(v)] |= uint64_t(1) << in(g.rot[v][i]);
  }
  int source = out(s), sink = in(t);
  int parent[2 * kMaxEnumVertices];
  int queue[2 * kMaxEnumVertices];
  for (int flow = 0; flow < 3; ++flow) {
    std::memset(parent, -1, sizeof(int) * nodes);
    parent[source] = source;
    int head = 0, tail = 0;
    queue[tail++] = source;
    bool reached = false;
    while (head < tail && !reached) {
      int u = queue[head++];
      uint64_t next = res[u];
      while (next) {
        int v = std::countr_zero(next);
        next &= next - 1;
        if (parent[v] >= 0) continue;
        parent[v] = u;
        if (v == sink) {
          reached = true;
          break;
        }
        queue[tail++] = v;
      }
    }
    if (!reached) return false;
    for (int v = sink; v != source; v = parent[v]) {
      int u = parent[v];
      res[u] &= ~(uint64_t(1) << v);
      res[v] |= uint64_t(1) << u;
    }
  }
  return true;
}

// Open-addressed set of code byte strings; one per worker, merged at level end.
class LocalCodeSet {
public:
  explicit LocalCodeSet(size_t initial_buckets = 1 << 12) {
    table_.assign(initial_buckets, 0);
    mask_ = initial_buckets - 1;
  }

  bool insert(std::span<const uint8_t> code) {
    if ((count_ + 1) * 10 > table_.size() * 7) grow();
    size_t h = hash(code) & mask_;
    while (true) {
      uint32_t slot = table_[h];
      if (slot == 0) {
        table_[h] = static_cast<uint32_t>(starts_.size()) + 1;
        starts_.push_back(static_cast<uint32_t>(arena_.size()));
        lens_.push_back(static_cast<uint8_t>(code.size()));
        arena_.insert(arena_.end(), code.begin(), code.end());
        ++count_;
        return true;
      }
      if (equals(slot - 1, code)) return false;
      h = (h + 1) & mask_;
    }
  }

  size_t size() const { return count_; }
  std::span<const uint8_t> at(size_t i) const {
    return {arena_.data() + starts_[i], arena_.data() + starts_[i] + lens_[i]};
  }

private:
  static uint64_t hash(std::span<const uint8_t> code) {
    uint64_t h = 1469598103934665603ULL;
    for (uint8_t b : code) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return h;
  }

  bool equals(size_t i, std::span<const uint8_t> code) const {
    return lens_[i] == code.size() &&
           std::memcmp(arena_.data() + starts_[i], code.data(), code.size()) == 0;
  }

  void grow() {
    size_t buckets = table_.size() * 2;
    table_.assign(buckets, 0);
    mask_ = buckets - 1;
    for (size_t i = 0; i < starts_.size(); ++i) {
      size_t h = hash(at(i)) & mask_;
      while (table_[h] != 0) h = (h + 1) & mask_;
      table_[h] = static_cast<uint32_t>(i) + 1;
    }
  }

  std::vector<uint8_t> arena_;
  std::vector<uint32_t> starts_;
  std::vector<uint8_t> lens_;
  std::vector<uint32_t> table_;
  size_t mask_ = 0;
  size_t count_ = 0;
};

// Runs expand(parent_graph, local_set) over every parent across workers, then
// merges every worker's local set into one sorted deduplicated CodeSet.
template <typename Expand>
CodeSet parallel_expand(const CodeSet& parents, int workers, EnumerationCounters& counters,
                        Expand expand) {
  workers = std::max(1, std::min<int>(workers, 1 + static_cast<int>(parents.size()) / 16));
  std::vector<LocalCodeSet> locals;
  locals.reserve(workers);
  for (int i = 0; i < workers; ++i) locals.emplace_back();
  std::vector<uint64_t> attempts(workers, 0);

  std::atomic<size_t> cursor{0};
  constexpr size_t kChunk = 64;
  auto work = [&](int wid) {
    SmallGraph g;
    while (true) {
      size_t begin = cursor.fetch_add(kChunk);
      if (begin >= parents.size()) break;
      size_t end = std::min(parents.size(), begin + kChunk);
      for (size_t i = begin; i < end; ++i) {
        g.from_code(parents.at(i));
        attempts[wid] += expand(g, locals[wid]);
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }

  CodeSet merged;
  for (auto& local : locals)
    for (size_t i = 0; i < local.size(); ++i) merged.append(local.at(i));
  merged.sort_unique();
  uint64_t generated = 0;
  for (int i = 0; i < workers; ++i) generated += attempts[i];
  counters.generated += generated;
  counters.duplicates += generated - merged.size();
  return merged;
}

// All vertex splits of a triangulation: pick two distinct link positions; the
// split vertex keeps the fan from i to j inclusive, the new vertex takes the
// fan from j to i inclusive, both shared ends become common neighbors of the
// new edge.  Inverse of contracting an edge that lies in exactly two
// triangles, which every simple triangulation on >= 5 vertices admits.
uint64_t expand_splits(const SmallGraph& g, LocalCodeSet& out) {
  uint64_t produced = 0;
  SmallGraph child;
  for (int v = 0; v < g.n; ++v) {
    int k = g.deg[v];
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        int nv = g.n;
        child = g;
        child.n = g.n + 1;
        int x = g.rot[v][i], y = g.rot[v][j];
        // v keeps fan[i..j]; nv takes fan[j..i]; both cyclic inclusive.
        child.deg[v] = 0;
        child.adj[v] = 0;
        child.rot[v][child.deg[v]++] = static_cast<uint8_t>(nv);
        int len_keep = j - i + 1;
        int len_new = k - (j - i) + 1;
        for (int t = 0; t < len_keep; ++t)
          child.rot[v][child.deg[v]++] = g.rot[v][(i + t) % k];
        child.deg[nv] = 0;
        child.adj[nv] = 0;
        child.rot[nv][child.deg[nv]++] = static_cast<uint8_t>(v);
        for (int t = 0; t < len_new; ++t)
          child.rot[nv][child.deg[nv]++] = g.rot[v][(j + t) % k];
        for (int c = 0; c < child.deg[v]; ++c) child.adj[v] |= uint32_t(1) << child.rot[v][c];
        for (int c = 0; c < child.deg[nv]; ++c) child.adj[nv] |= uint32_t(1) << child.rot[nv][c];
        // Interior of the new vertex's fan now neighbors nv instead of v.
        for (int t = (j + 1) % k; t != i; t = (t + 1) % k) {
          int w = g.rot[v][t];
          child.rot[w][child.position_of(w, v)] = static_cast<uint8_t>(nv);
          child.adj[w] = (child.adj[w] & ~(uint32_t(1) << v)) | (uint32_t(1) << nv);
        }
        // Shared ends see both: x gets (v, nv), y gets (nv, v).
        auto splice = [&](int w, bool new_first) {
          int p = child.position_of(w, v);
          std::memmove(child.rot[w] + p + 1, child.rot[w] + p, child.deg[w] - p);
          child.rot[w][new_first ? p : p + 1] = static_cast<uint8_t>(nv);
          ++child.deg[w];
          child.adj[w] |= uint32_t(1) << nv;
        };
        splice(x, false);  // x: ..., v, nv, ...
        splice(y, true);   // y: ..., nv, v, ...
        canonical_of(child, tls_code);
        out.insert(tls_code);
        ++produced;
      }
    }
  }
  return produced;
}

// All single edge deletions that keep the graph 3-connected.
uint64_t expand_deletions(const SmallGraph& g, LocalCodeSet& out) {
  uint64_t produced = 0;
  SmallGraph child;
  for (int x = 0; x < g.n; ++x) {
    if (g.deg[x] < 4) continue;
    for (int p = 0; p < g.deg[x]; ++p) {
      int y = g.rot[x][p];
      if (y < x || g.deg[y] < 4) continue;
      child = g;
      child.remove_edge(x, y);
      if (!three_connected_after_deletion(child, x, y)) continue;
      canonical_of(child, tls_code);
      out.insert(tls_code);
      ++produced;
    }
  }
  return produced;
}

}  // namespace

EnumerationRun enumerate_polyhedral(int max_vertices, int workers, bool allow_above_cap) {
  if (max_vertices < 4) throw Error(Errc::bad_input, "enumeration starts at 4 vertices");
  if (max_vertices > kSoftVertexCap && !allow_above_cap)
    throw Error(Errc::cap_exceeded, "max_vertices " + std::to_string(max_vertices) +
                                        " above the soft cap " + std::to_string(kSoftVertexCap) +
                                        "; pass the override to proceed");
  if (max_vertices > kMaxEnumVertices)
    throw Error(Errc::cap_exceeded,
                "this build represents at most " + std::to_string(kMaxEnumVertices) + " vertices");
  workers = resolve_worker_count(workers);

  auto start = std::chrono::steady_clock::now();
  EnumerationRun run;
  run.max_vertices = max_vertices;
  run.by_vertices.resize(max_vertices + 1);

  // Seed: the tetrahedron, the unique triangulation on 4 vertices.
  CodeSet tetra;
  {
    SmallGraph k4;
    k4.clear(4);
    const uint8_t lists[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    for (int v = 0; v < 4; ++v) {
      k4.deg[v] = 3;
      for (int i = 0; i < 3; ++i) {
        k4.rot[v][i] = lists[v][i];
        k4.adj[v] |= uint32_t(1) << lists[v][i];
      }
    }
    canonical_of(k4, tls_code);
    tetra.append(tls_code);
    run.counters.generated += 1;
  }

  // Phase 1: triangulations on n vertices, grown by vertex splitting.
  std::vector<CodeSet> triangulations(max_vertices + 1);
  triangulations[4] = std::move(tetra);
  for (int n = 5; n <= max_vertices; ++n)
    triangulations[n] = parallel_expand(triangulations[n - 1], workers, run.counters,
                                        expand_splits);

  // Phase 2: within each n, delete edges while 3-connectivity survives.  Every
  // polyhedral graph is a spanning subgraph of a triangulation and every
  // intermediate supergraph stays 3-connected, so the sweep is exhaustive.
  for (int n = 4; n <= max_vertices; ++n) {
    CodeSet all = triangulations[n];
    CodeSet level = std::move(triangulations[n]);
    while (!level.empty()) {
      CodeSet next = parallel_expand(level, workers, run.counters, expand_deletions);
      for (size_t i = 0; i < next.size(); ++i) all.append(next.at(i));
      level = std::move(next);
    }
    all.sort_unique();  // levels are disjoint by edge count; this just orders
    run.by_vertices[n] = std::move(all);
  }

  run.counters.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace polycensus
