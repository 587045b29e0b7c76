#pragma once

#include "polycensus/enumeration.hpp"

namespace polycensus {

/// Independent verification path: iterates every labeled simple graph on n
/// vertices, keeps those with minimum degree 3 that are 3-connected, decides
/// planarity by counting non-separating induced cycles per edge (never by the
/// main pipeline's face tracing), reconstructs the unique sphere embedding
/// from those cycles and emits canonical codes.  4 <= n <= 8; throws
/// Errc::out_of_oracle_range beyond.
CodeSet brute_force_oracle(int n, int workers = 0);

}  // namespace polycensus
