#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polycensus/embedding.hpp"

namespace polycensus {

/// Sorted duplicate-free collection of canonical codes in flat storage.
class CodeSet {
public:
  CodeSet() { offsets_.push_back(0); }

  size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }

  std::span<const uint8_t> at(size_t i) const {
    return {bytes_.data() + offsets_[i], bytes_.data() + offsets_[i + 1]};
  }
  CanonicalCode code_at(size_t i) const;
  bool contains(std::span<const uint8_t> code) const;
  bool contains(const CanonicalCode& code) const;

  /// Appends without ordering; call sort_unique before queries.
  void append(std::span<const uint8_t> code);
  void sort_unique();

  bool operator==(const CodeSet& other) const {
    return bytes_ == other.bytes_ && offsets_ == other.offsets_;
  }

private:
  std::vector<uint8_t> bytes_;
  std::vector<uint32_t> offsets_;
};

struct EnumerationCounters {
  uint64_t generated = 0;   // candidates that passed validation
  uint64_t duplicates = 0;  // candidates rejected as already known
  double wall_seconds = 0;
};

struct EnumerationRun {
  int max_vertices = 0;
  std::vector<CodeSet> by_vertices;  // index n = all n-vertex polyhedral types
  EnumerationCounters counters;
};

inline constexpr int kSoftVertexCap = 16;

/// Worker count from the request or the POLYCENSUS_THREADS environment
/// variable; 0 means auto (hardware concurrency).
int resolve_worker_count(int requested);

/// Isomorphism-free enumeration of every polyhedral graph with 4..max_vertices
/// vertices.  Simple planar triangulations are grown from the tetrahedron by
/// vertex splitting; the general graphs are reached by deleting edges while
/// 3-connectivity holds.  Per-n sets are byte-identical across runs and worker
/// counts.  Throws Errc::cap_exceeded above the soft cap without the override.
EnumerationRun enumerate_polyhedral(int max_vertices, int workers = 0,
                                    bool allow_above_cap = false);

}  // namespace polycensus
