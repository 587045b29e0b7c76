#pragma once

#include <vector>

#include "polycensus/validity.hpp"

namespace polycensus {

/// A simple non-facial cycle along edges whose removal separates the sphere
/// into two cappable polyhedral parts.  Every cycle vertex is at least
/// 4-valent and has at least one incident edge strictly on each side.
struct SeparatingCycle {
  std::vector<int> vertices;       // cyclic order along edges
  std::vector<int32_t> side_a;     // darts strictly on one side
  std::vector<int32_t> side_b;     // darts strictly on the other
};

/// All separating cycles whose both capped sides validate as polyhedral
/// graphs, deduplicated and sorted by (length, canonical cyclic vertex form).
std::vector<SeparatingCycle> separating_cycles(const PolyhedralGraph& g);

bool is_reducible(const PolyhedralGraph& g);

struct Decomposition {
  SeparatingCycle cycle;
  PolyhedralGraph factor_first;
  PolyhedralGraph factor_second;
  int cap_face_first = -1;   // face of factor_first bounded by the cycle
  int cap_face_second = -1;
  std::vector<int> vertex_map_first;   // factor vertex -> original vertex
  std::vector<int> vertex_map_second;
};

/// Splits g along c: each factor is one side plus the cycle, capped with a new
/// face bounded by the cycle.  Throws Errc::not_separating when either capped
/// side fails validation (guards direct calls with hand-built cycles).
Decomposition split_along(const PolyhedralGraph& g, const SeparatingCycle& c);

struct FactorTree {
  CanonicalCode code;
  bool irreducible = false;
  std::vector<int> seam;            // empty at leaves
  std::vector<FactorTree> children; // two per split

  /// Sorted multiset of irreducible leaf codes.
  std::vector<CanonicalCode> leaf_codes() const;
};

/// Recursively splits along the deterministically first separating cycle
/// until every leaf is irreducible.
FactorTree factorize(const PolyhedralGraph& g);

struct GlueMatching {
  int offset = 0;      // corner alignment along the seam
  bool mirror = false; // reflect the second graph before gluing
};

/// Glues two polyhedral graphs along faces of equal size, identifying the
/// boundaries in reversed orientation.  Inverse of split_along: gluing the two
/// factors along their cap faces reproduces the original for some matching.
/// Throws Errc::size_mismatch, Errc::not_simple (identification created a
/// multi-edge) or Errc::not_polyhedral.
PolyhedralGraph glue(const PolyhedralGraph& a, int face_first, const PolyhedralGraph& b,
                     int face_second, GlueMatching m = {});

}  // namespace polycensus
