#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polycensus/errors.hpp"

namespace polycensus {

/// A combinatorial embedding of a graph on an orientable surface, stored as a
/// rotation system: every vertex carries the cyclic order of its incident
/// darts.  Dart identifiers are dense integers; edge i owns the dart pair
/// (2i, 2i+1), so opposite(d) == (d ^ 1).  Embeddings are immutable after
/// construction and safe to share between threads.
class Embedding {
public:
  Embedding() = default;  // empty; fill via the named constructors

  /// Builds an embedding from per-vertex ordered neighbor lists.  Dart pairing
  /// matches the k-th occurrence of (u -> v) with the k-th occurrence of
  /// (v -> u), so parallel edges are representable.  Loops are rejected.
  static Embedding from_neighbor_lists(int vertex_count,
                                       const std::vector<std::vector<int>>& neighbors);

  /// Builds directly from dart structure: rotations[v] lists dart ids in
  /// cyclic order, dart_target[d] is the head vertex of dart d, and opposite
  /// darts are (2i, 2i+1).  Used internally (dual construction); loops are
  /// allowed here and flagged later by validity checks.
  static Embedding from_darts(int vertex_count, std::vector<int32_t> dart_target,
                              const std::vector<std::vector<int32_t>>& rotations);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(dart_target_.size()) / 2; }
  int dart_count() const { return static_cast<int>(dart_target_.size()); }

  static int opposite(int dart) { return dart ^ 1; }
  int origin(int dart) const { return dart_origin_[dart]; }
  int target(int dart) const { return dart_target_[dart]; }
  int degree(int v) const { return rot_begin_[v + 1] - rot_begin_[v]; }

  /// Darts leaving v in cyclic order.
  std::span<const int32_t> rotation(int v) const {
    return {rot_.data() + rot_begin_[v], rot_.data() + rot_begin_[v + 1]};
  }

  /// Next/previous dart in the cyclic rotation at origin(dart).
  int rotation_next(int dart) const;
  int rotation_prev(int dart) const;

  /// Face-tracing successor with the fixed chirality used throughout: from
  /// dart d, take its opposite, then the next dart in the rotation at that
  /// endpoint.
  int face_successor(int dart) const { return rotation_next(opposite(dart)); }

  /// First dart from u to v, or -1.
  int dart_between(int u, int v) const;

  bool has_loop() const;
  bool connected() const;

  std::vector<std::vector<int>> neighbor_lists() const;

  /// Same darts and edges, every rotation reversed (the mirror image).
  Embedding mirrored() const;

  /// Relabels vertices; perm[old] = new.
  Embedding relabeled(const std::vector<int>& perm) const;

private:
  void index_rotations(const std::vector<std::vector<int32_t>>& rotations);

  int n_ = 0;
  std::vector<int32_t> dart_target_;
  std::vector<int32_t> dart_origin_;
  std::vector<int32_t> rot_;        // darts concatenated vertex by vertex
  std::vector<int32_t> rot_begin_;  // n_ + 1 offsets into rot_
  std::vector<int32_t> rot_pos_;    // dart -> absolute index in rot_
};

struct Face {
  std::vector<int32_t> boundary;  // darts in trace order
  int size() const { return static_cast<int>(boundary.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int32_t> face_of_dart;

  int count() const { return static_cast<int>(faces.size()); }
  int face_at(int dart) const { return face_of_dart[dart]; }
  /// Vertex sequence around face f in trace order.
  std::vector<int> vertex_cycle(const Embedding& e, int f) const;
};

/// Decomposes all darts into face orbits of the face-tracing successor.
FaceSet trace_faces(const Embedding& e);

/// True iff V - E + F == 2 (sphere embedding).  Throws Errc::disconnected.
bool genus_check(const Embedding& e);

/// Dual embedding on the same dart set: dual vertices are primal faces, the
/// rotation at a dual vertex is the primal face boundary in trace order.
/// Requires genus_check(e).
Embedding dual(const Embedding& e);

/// A totally ordered byte sequence identifying an embedding up to sphere
/// homeomorphism including reflection.  The bytes are a planar_code body:
/// [n][neighbors of vertex 1..., 0][neighbors of vertex 2..., 0]...
struct CanonicalCode {
  std::vector<uint8_t> bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string hex() const;
  static CanonicalCode from_hex(const std::string& hex);
};

/// Lexicographic minimum over all starting darts and both orientations of a
/// breadth-first planar-code serialization.  Requires a connected, loop-free,
/// multi-edge-free embedding with at most 255 vertices; for 3-connected
/// planar graphs equal codes mean equal polyhedral types.
CanonicalCode canonical_code(const Embedding& e);

/// Inverse of canonical_code up to relabeling: decoding then re-encoding is
/// the identity on canonical codes.
Embedding decode(const CanonicalCode& code);

}  // namespace polycensus
