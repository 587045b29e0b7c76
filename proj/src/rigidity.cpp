#include "polycensus/rigidity.hpp"

#include <algorithm>
#include <numeric>

#include "polycensus/validity.hpp"

namespace polycensus {

GraphProfile build_profile(const Embedding& e, const FaceSet& faces) {
  GraphProfile p;
  int n = e.vertex_count();
  p.nontri.assign(n, 0);
  for (int v = 0; v < n; ++v) ++p.v_k[e.degree(v)];
  for (const Face& f : faces.faces) ++p.f_k[f.size()];

  std::vector<char> all_triangles(n, 1);
  for (int v = 0; v < n; ++v) {
    // Every dart leaving v marks one face corner at v; in a polyhedral graph
    // each incident face contributes exactly one corner (asserted below).
    for (int32_t d : e.rotation(v)) {
      int s = faces.faces[faces.face_at(d)].size();
      if (s >= 4) {
        ++p.nontri[v];
        all_triangles[v] = 0;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (p.nontri[v] <= 3)
      p.rigid_vertices.push_back(v);
    if (all_triangles[v]) p.totally_triangular.push_back(v);
  }
  p.rigid_count = static_cast<int>(p.rigid_vertices.size());
  p.nonrigid_count = n - p.rigid_count;
  return p;
}

int nontriangular_degree(const PolyhedralGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw Error(Errc::bad_input, "vertex index out of range");
  // Distinct incident faces must equal corner count: a face meeting v at two
  // corners cannot occur in a polyhedral graph.
  const FaceSet& fs = g.faces();
  std::vector<int> incident;
  for (int32_t d : g.embedding().rotation(v)) incident.push_back(fs.face_at(d));
  std::sort(incident.begin(), incident.end());
  if (std::adjacent_find(incident.begin(), incident.end()) != incident.end())
    throw Error(Errc::invalid_graph, "face meets vertex at two corners");
  return g.profile().nontri[v];
}

const std::vector<int>& rigid_vertices(const PolyhedralGraph& g) {
  return g.profile().rigid_vertices;
}

bool IdentityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport check_identities(const PolyhedralGraph& g) {
  const GraphProfile& p = g.profile();
  long long e2 = 2LL * g.edge_count();
  auto count = [](const std::map<int, int>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? 0LL : static_cast<long long>(it->second);
  };

  long long v3 = count(p.v_k, 3), f3 = count(p.f_k, 3);
  long long high = 0;
  for (const auto& [k, c] : p.v_k)
    if (k >= 5) high += static_cast<long long>(k - 4) * c;
  for (const auto& [k, c] : p.f_k)
    if (k >= 5) high += static_cast<long long>(k - 4) * c;

  long long v_hand = 0, f_hand = 0, v_odd = 0, f_odd = 0;
  for (const auto& [k, c] : p.v_k) {
    v_hand += static_cast<long long>(k) * c;
    if (k % 2) v_odd += c;
  }
  for (const auto& [k, c] : p.f_k) {
    f_hand += static_cast<long long>(k) * c;
    if (k % 2) f_odd += c;
  }

  long long rig = p.rigid_count;

  IdentityReport report;
  report.checks.push_back({"v3_f3_identity", v3 + f3, high + 8, v3 + f3 == high + 8});
  report.checks.push_back({"double_handshake", v_hand, f_hand, v_hand == e2 && f_hand == e2});
  report.checks.push_back({"odd_parity", v_odd % 2, f_odd % 2, v_odd % 2 == 0 && f_odd % 2 == 0});
  report.checks.push_back(
      {"f3_two_sided_bound", 8 - rig, 2 * rig - 4, 8 - rig <= f3 && f3 <= 2 * rig - 4});
  report.checks.push_back({"rigid_at_least_four", rig, 4, rig >= 4});
  report.checks.push_back({"rigid_exists", rig, 1, rig >= 1});
  return report;
}

AngleSum regular_angle_feasible(const PolyhedralGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw Error(Errc::bad_input, "vertex index out of range");
  // Sum of (s-2)/s over incident faces, kept exact so the 2*pi boundary
  // (four quadrilaterals) never depends on rounding.
  long long num = 0, den = 1;
  const FaceSet& fs = g.faces();
  for (int32_t d : g.embedding().rotation(v)) {
    long long s = fs.faces[fs.face_at(d)].size();
    num = num * s + (s - 2) * den;
    den *= s;
    long long c = std::gcd(num, den);
    num /= c;
    den /= c;
  }
  return {num < 2 * den, num, den};
}

}  // namespace polycensus
