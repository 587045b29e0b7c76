#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polycensus/embedding.hpp"

namespace polycensus {

class PolyhedralGraph;

/// Degree and face-size statistics of a polyhedral graph, together with the
/// per-vertex non-triangular degrees and the rigid/non-rigid vertex split.
/// A vertex is (combinatorially) rigid when at most 3 incident faces have
/// size >= 4.
struct GraphProfile {
  std::map<int, int> v_k;  // degree -> vertex count
  std::map<int, int> f_k;  // face size -> face count
  std::vector<int> nontri;  // per-vertex non-triangular degree
  std::vector<int> rigid_vertices;      // sorted
  std::vector<int> totally_triangular;  // sorted; all incident faces triangles
  int rigid_count = 0;
  int nonrigid_count = 0;
};

GraphProfile build_profile(const Embedding& e, const FaceSet& faces);

int nontriangular_degree(const PolyhedralGraph& g, int v);
const std::vector<int>& rigid_vertices(const PolyhedralGraph& g);

struct IdentityCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool passed = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// Evaluates the six counting identities and inequalities that hold for every
/// polyhedral graph: V3 + F3 = sum_{n>=5}(n-4)(Vn+Fn) + 8; the double
/// handshake 2E = sum n Vn = sum n Fn; the odd-index parity of both vectors;
/// the two-sided bound 8 - Vrig <= F3 <= 2 Vrig - 4; Vrig >= 4; Vrig >= 1.
IdentityReport check_identities(const PolyhedralGraph& g);

/// Exact angle sum at v if every incident face were a regular polygon, as a
/// rational multiple of pi.  feasible iff the sum is strictly below 2*pi.
struct AngleSum {
  bool feasible = false;
  long long num = 0;
  long long den = 1;
};

AngleSum regular_angle_feasible(const PolyhedralGraph& g, int v);

}  // namespace polycensus
