#pragma once

#include <cstdint>
#include <vector>

namespace polycensus {

/// Flat rotation-system view for the canonical coder: neighbor ids (0-based,
/// < 256) concatenated vertex by vertex.  The graph must be simple and
/// connected.
struct RotationView {
  int n = 0;
  const uint8_t* rot = nullptr;
  const int32_t* begin = nullptr;  // n + 1 offsets
};

/// Appends nothing; overwrites out with the canonical planar-code body:
/// the lexicographic minimum over all starting darts at minimum-degree
/// vertices (the minimum over all darts, by the code prefix shape) and both
/// orientations of a breadth-first serialization.  Scratch buffers live in
/// thread-local storage; safe to call concurrently.
void canonical_code_bytes(const RotationView& g, std::vector<uint8_t>& out);

}  // namespace polycensus
