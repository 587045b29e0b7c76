#include "polycensus/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace polycensus {

namespace {

struct Scratch {
  std::vector<uint8_t> pos;    // n*n: pos[v*n+u] = index of u in v's rotation
  std::vector<uint8_t> label;  // 0 = unlabeled
  std::vector<uint8_t> order;  // vertices in label order
  std::vector<int32_t> entry;  // relative rotation index of the entry dart
};

thread_local Scratch tls;

// Emits the serialization for one (start vertex, start position, direction)
// into out[1..]; returns false when it compares greater than out and was
// abandoned.  With `writing`, fills out unconditionally.
bool emit(const RotationView& g, int start, int start_pos, bool forward, bool writing,
          std::vector<uint8_t>& out) {
  const int n = g.n;
  auto& label = tls.label;
  auto& order = tls.order;
  auto& entry = tls.entry;
  std::memset(label.data(), 0, n);
  label[start] = 1;
  order[0] = static_cast<uint8_t>(start);
  entry[start] = start_pos;
  int next_label = 1;
  size_t idx = 0;  // position in out, byte 0 is the vertex count

  for (int qi = 0; qi < n; ++qi) {
    int u = order[qi];
    const int32_t base = g.begin[u];
    const int k = g.begin[u + 1] - base;
    const int step = forward ? 1 : k - 1;
    int rel = entry[u];
    for (int t = 0; t < k; ++t) {
      int w = g.rot[base + rel];
      rel += step;
      if (rel >= k) rel -= k;
      uint8_t lw = label[w];
      if (lw == 0) {
        lw = static_cast<uint8_t>(++next_label);
        label[w] = lw;
        order[next_label - 1] = static_cast<uint8_t>(w);
        entry[w] = tls.pos[static_cast<size_t>(w) * n + u];
      }
      ++idx;
      if (!writing) {
        if (lw > out[idx]) return false;
        if (lw < out[idx]) writing = true;
      }
      if (writing) out[idx] = lw;
    }
    ++idx;
    if (!writing) {
      if (out[idx] == 0) continue;  // separator matches
      // 0 < any label byte: strictly smaller from here on.
      writing = true;
    }
    out[idx] = 0;
  }
  return true;
}

}  // namespace

void canonical_code_bytes(const RotationView& g, std::vector<uint8_t>& out) {
  const int n = g.n;
  const size_t darts = static_cast<size_t>(g.begin[n]);
  out.assign(1 + darts + n, 0);
  out[0] = static_cast<uint8_t>(n);
  if (n == 1) return;  // single vertex: [1, 0]

  auto& s = tls;
  s.pos.assign(static_cast<size_t>(n) * n, 0);
  s.label.assign(n, 0);
  s.order.assign(n, 0);
  s.entry.assign(n, 0);
  for (int v = 0; v < n; ++v)
    for (int32_t i = g.begin[v]; i < g.begin[v + 1]; ++i)
      s.pos[static_cast<size_t>(v) * n + g.rot[i]] = static_cast<uint8_t>(i - g.begin[v]);

  // The code after the count byte starts with (2, 3, ..., deg+1, 0), so the
  // minimum is always reached from a minimum-degree start vertex.
  int mindeg = n;
  for (int v = 0; v < n; ++v) mindeg = std::min(mindeg, g.begin[v + 1] - g.begin[v]);

  bool first = true;
  for (int v = 0; v < n; ++v) {
    if (g.begin[v + 1] - g.begin[v] != mindeg) continue;
    for (int p = 0; p < mindeg; ++p) {
      for (int dir = 0; dir < 2; ++dir) {
        emit(g, v, p, dir == 0, first, out);
        first = false;
      }
    }
  }
}

}  // namespace polycensus
