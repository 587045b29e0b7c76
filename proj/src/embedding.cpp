#include "polycensus/embedding.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "polycensus/canonical.hpp"

namespace polycensus {

void Embedding::index_rotations(const std::vector<std::vector<int32_t>>& rotations) {
  rot_begin_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v)
    rot_begin_[v + 1] = rot_begin_[v] + static_cast<int32_t>(rotations[v].size());
  rot_.resize(rot_begin_[n_]);
  rot_pos_.assign(dart_target_.size(), -1);
  dart_origin_.assign(dart_target_.size(), -1);
  for (int v = 0; v < n_; ++v) {
    int32_t base = rot_begin_[v];
    for (size_t i = 0; i < rotations[v].size(); ++i) {
      int32_t d = rotations[v][i];
      rot_[base + static_cast<int32_t>(i)] = d;
      rot_pos_[d] = base + static_cast<int32_t>(i);
      dart_origin_[d] = v;
    }
  }
  for (size_t d = 0; d < dart_target_.size(); ++d)
    if (rot_pos_[d] < 0)
      throw Error(Errc::bad_input, "dart " + std::to_string(d) + " missing from rotations");
}

Embedding Embedding::from_neighbor_lists(int vertex_count,
                                         const std::vector<std::vector<int>>& neighbors) {
  if (vertex_count < 1) throw Error(Errc::bad_input, "vertex_count must be positive");
  if (static_cast<int>(neighbors.size()) != vertex_count)
    throw Error(Errc::bad_input, "neighbor list count differs from vertex_count");

  // Occurrence lists per ordered pair, in order of appearance.
  std::map<std::pair<int, int>, std::vector<int>> occ;  // (u,v) -> positions in u's list
  for (int u = 0; u < vertex_count; ++u) {
    for (size_t i = 0; i < neighbors[u].size(); ++i) {
      int v = neighbors[u][i];
      if (v < 0 || v >= vertex_count)
        throw Error(Errc::bad_input, "neighbor index out of range at vertex " + std::to_string(u));
      if (v == u)
        throw Error(Errc::self_loop, "vertex " + std::to_string(u) + " lists itself");
      occ[{u, v}].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [key, slots] : occ) {
    auto [u, v] = key;
    auto it = occ.find({v, u});
    size_t back = it == occ.end() ? 0 : it->second.size();
    if (slots.size() != back)
      throw Error(Errc::mismatched_adjacency,
                  "(" + std::to_string(u) + "->" + std::to_string(v) + ") occurs " +
                      std::to_string(slots.size()) + " times but the reverse occurs " +
                      std::to_string(back));
  }

  Embedding e;
  e.n_ = vertex_count;
  std::vector<std::vector<int32_t>> rotations(vertex_count);
  for (int v = 0; v < vertex_count; ++v) rotations[v].assign(neighbors[v].size(), -1);

  int32_t next_edge = 0;
  for (const auto& [key, slots] : occ) {
    auto [u, v] = key;
    if (u > v) continue;
    const auto& back = occ[{v, u}];
    for (size_t k = 0; k < slots.size(); ++k) {
      int32_t d = 2 * next_edge;
      rotations[u][slots[k]] = d;
      rotations[v][back[k]] = d + 1;
      e.dart_target_.push_back(v);
      e.dart_target_.push_back(u);
      ++next_edge;
    }
  }
  e.index_rotations(rotations);
  return e;
}

Embedding Embedding::from_darts(int vertex_count, std::vector<int32_t> dart_target,
                                const std::vector<std::vector<int32_t>>& rotations) {
  if (vertex_count < 1) throw Error(Errc::bad_input, "vertex_count must be positive");
  if (dart_target.size() % 2 != 0) throw Error(Errc::bad_input, "odd dart count");
  Embedding e;
  e.n_ = vertex_count;
  e.dart_target_ = std::move(dart_target);
  e.index_rotations(rotations);
  for (int d = 0; d < e.dart_count(); ++d)
    if (e.dart_target_[opposite(d)] != e.dart_origin_[d])
      throw Error(Errc::bad_input, "opposite dart of " + std::to_string(d) +
                                       " does not end at its origin");
  return e;
}

int Embedding::rotation_next(int dart) const {
  int v = dart_origin_[dart];
  int32_t p = rot_pos_[dart] + 1;
  if (p == rot_begin_[v + 1]) p = rot_begin_[v];
  return rot_[p];
}

int Embedding::rotation_prev(int dart) const {
  int v = dart_origin_[dart];
  int32_t p = rot_pos_[dart];
  if (p == rot_begin_[v]) p = rot_begin_[v + 1];
  return rot_[p - 1];
}

int Embedding::dart_between(int u, int v) const {
  for (int32_t d : rotation(u))
    if (dart_target_[d] == v) return d;
  return -1;
}

bool Embedding::has_loop() const {
  for (int d = 0; d < dart_count(); d += 2)
    if (dart_origin_[d] == dart_target_[d]) return true;
  return false;
}

bool Embedding::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int32_t d : rotation(v)) {
      int w = dart_target_[d];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

std::vector<std::vector<int>> Embedding::neighbor_lists() const {
  std::vector<std::vector<int>> out(n_);
  for (int v = 0; v < n_; ++v) {
    out[v].reserve(degree(v));
    for (int32_t d : rotation(v)) out[v].push_back(dart_target_[d]);
  }
  return out;
}

Embedding Embedding::mirrored() const {
  Embedding e;
  e.n_ = n_;
  e.dart_target_ = dart_target_;
  std::vector<std::vector<int32_t>> rotations(n_);
  for (int v = 0; v < n_; ++v) {
    auto r = rotation(v);
    rotations[v].assign(r.rbegin(), r.rend());
  }
  e.index_rotations(rotations);
  return e;
}

Embedding Embedding::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(Errc::bad_input, "permutation size differs from vertex count");
  Embedding e;
  e.n_ = n_;
  e.dart_target_.resize(dart_target_.size());
  for (int d = 0; d < dart_count(); ++d) e.dart_target_[d] = perm[dart_target_[d]];
  std::vector<std::vector<int32_t>> rotations(n_);
  for (int v = 0; v < n_; ++v) {
    auto r = rotation(v);
    rotations[perm[v]].assign(r.begin(), r.end());
  }
  e.index_rotations(rotations);
  return e;
}

std::vector<int> FaceSet::vertex_cycle(const Embedding& e, int f) const {
  std::vector<int> out;
  out.reserve(faces[f].boundary.size());
  for (int32_t d : faces[f].boundary) out.push_back(e.origin(d));
  return out;
}

FaceSet trace_faces(const Embedding& e) {
  FaceSet fs;
  fs.face_of_dart.assign(e.dart_count(), -1);
  for (int d0 = 0; d0 < e.dart_count(); ++d0) {
    if (fs.face_of_dart[d0] >= 0) continue;
    Face face;
    int32_t id = static_cast<int32_t>(fs.faces.size());
    int d = d0;
    do {
      fs.face_of_dart[d] = id;
      face.boundary.push_back(d);
      d = e.face_successor(d);
    } while (d != d0);
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

bool genus_check(const Embedding& e) {
  if (!e.connected()) throw Error(Errc::disconnected, "genus_check needs a connected embedding");
  FaceSet fs = trace_faces(e);
  return e.vertex_count() - e.edge_count() + fs.count() == 2;
}

Embedding dual(const Embedding& e) {
  if (!genus_check(e)) throw Error(Errc::bad_input, "dual requires a sphere embedding");
  FaceSet fs = trace_faces(e);
  std::vector<int32_t> dart_target(e.dart_count());
  for (int d = 0; d < e.dart_count(); ++d)
    dart_target[d] = fs.face_of_dart[Embedding::opposite(d)];
  std::vector<std::vector<int32_t>> rotations;
  rotations.reserve(fs.count());
  for (const Face& f : fs.faces) rotations.push_back(f.boundary);
  return Embedding::from_darts(fs.count(), std::move(dart_target), rotations);
}

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(Errc::bad_input, "invalid hex digit");
  };
  if (hex.size() % 2 != 0) throw Error(Errc::bad_input, "odd hex length");
  CanonicalCode code;
  code.bytes.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2)
    code.bytes.push_back(static_cast<uint8_t>(nib(hex[i]) * 16 + nib(hex[i + 1])));
  return code;
}

CanonicalCode canonical_code(const Embedding& e) {
  if (e.vertex_count() > 255)
    throw Error(Errc::bad_input, "canonical codes cover at most 255 vertices");
  if (!e.connected()) throw Error(Errc::disconnected, "canonical_code needs a connected graph");

  // Flatten to neighbor ids; the coder requires a simple graph.
  int n = e.vertex_count();
  std::vector<uint8_t> rot;
  rot.reserve(e.dart_count());
  std::vector<int32_t> begin(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    begin[v + 1] = begin[v] + e.degree(v);
    for (int32_t d : e.rotation(v)) {
      int w = e.target(d);
      if (w == v) throw Error(Errc::bad_input, "canonical_code rejects loops");
      rot.push_back(static_cast<uint8_t>(w));
    }
  }
  for (int v = 0; v < n; ++v) {
    auto lo = rot.begin() + begin[v], hi = rot.begin() + begin[v + 1];
    std::array<char, 256> seen{};
    for (auto it = lo; it != hi; ++it) {
      if (seen[*it]) throw Error(Errc::bad_input, "canonical_code rejects multi-edges");
      seen[*it] = 1;
    }
  }

  RotationView view{n, rot.data(), begin.data()};
  CanonicalCode code;
  canonical_code_bytes(view, code.bytes);
  return code;
}

Embedding decode(const CanonicalCode& code) {
  const auto& b = code.bytes;
  if (b.empty()) throw Error(Errc::bad_input, "empty code");
  int n = b[0];
  if (n < 1) throw Error(Errc::bad_input, "code names zero vertices");
  std::vector<std::vector<int>> neighbors(n);
  size_t pos = 1;
  for (int v = 0; v < n; ++v) {
    while (true) {
      if (pos >= b.size()) throw Error(Errc::bad_input, "truncated code");
      uint8_t x = b[pos++];
      if (x == 0) break;
      if (x > n) throw Error(Errc::bad_input, "neighbor id out of range in code");
      neighbors[v].push_back(x - 1);
    }
  }
  if (pos != b.size()) throw Error(Errc::bad_input, "trailing bytes after code");
  return Embedding::from_neighbor_lists(n, neighbors);
}

}  // namespace polycensus
