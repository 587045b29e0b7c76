#include "polycensus/validity.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace polycensus {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::bad_input: return "bad_input";
    case Errc::self_loop: return "self_loop";
    case Errc::mismatched_adjacency: return "mismatched_adjacency";
    case Errc::disconnected: return "disconnected";
    case Errc::too_small: return "too_small";
    case Errc::invalid_graph: return "invalid_graph";
    case Errc::not_separating: return "not_separating";
    case Errc::size_mismatch: return "size_mismatch";
    case Errc::not_simple: return "not_simple";
    case Errc::not_polyhedral: return "not_polyhedral";
    case Errc::not_triangle: return "not_triangle";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::out_of_oracle_range: return "out_of_oracle_range";
    case Errc::range_too_small: return "range_too_small";
  }
  return "unknown";
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  bool first = true;
  for (const CheckResult& c : checks) {
    if (c.passed) continue;
    if (!first) out << "; ";
    first = false;
    out << c.name;
    if (!c.witness.empty()) out << " (" << c.witness << ")";
  }
  if (first) out << "all checks passed";
  return out.str();
}

std::optional<std::pair<int, int>> check_simple(const Embedding& e) {
  std::set<std::pair<int, int>> seen;
  for (int d = 0; d < e.dart_count(); d += 2) {
    int u = e.origin(d), v = e.target(d);
    if (u == v) return std::make_pair(u, v);
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) return key;
  }
  return std::nullopt;
}

namespace {

// Connectivity of the graph minus {cut_a, cut_b} (either may be -1), over
// 64-bit adjacency masks.
bool connected_without(const std::vector<uint64_t>& adj, int n, int cut_a, int cut_b) {
  uint64_t removed = 0;
  if (cut_a >= 0) removed |= uint64_t(1) << cut_a;
  if (cut_b >= 0) removed |= uint64_t(1) << cut_b;
  uint64_t all = (n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1) & ~removed;
  if (all == 0) return true;
  uint64_t frontier = all & (~all + 1);  // lowest remaining vertex
  uint64_t seen = frontier;
  while (frontier) {
    uint64_t next = 0;
    uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    frontier = next & all & ~seen;
    seen |= frontier;
  }
  return seen == all;
}

std::vector<uint64_t> adjacency_masks(const Embedding& e) {
  std::vector<uint64_t> adj(e.vertex_count(), 0);
  for (int v = 0; v < e.vertex_count(); ++v)
    for (int32_t d : e.rotation(v)) adj[v] |= uint64_t(1) << e.target(d);
  return adj;
}

}  // namespace

std::optional<std::pair<int, int>> check_three_connected(const Embedding& e) {
  int n = e.vertex_count();
  if (n < 4) throw Error(Errc::too_small, "3-connectivity needs at least 4 vertices");
  if (n > 64) throw Error(Errc::bad_input, "3-connectivity check capped at 64 vertices");
  auto adj = adjacency_masks(e);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!connected_without(adj, n, u, v)) return std::make_pair(u, v);
  return std::nullopt;
}

ValidationReport validate(const Embedding& e) {
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string witness = {}) {
    report.checks.push_back({std::move(name), passed, std::move(witness)});
  };

  int n = e.vertex_count();
  add("min_size", n >= 4, n >= 4 ? "" : "only " + std::to_string(n) + " vertices");

  auto simple = check_simple(e);
  add("simple", !simple,
      simple ? "vertex pair (" + std::to_string(simple->first) + "," +
                   std::to_string(simple->second) + ")"
             : "");

  bool conn = e.connected();
  add("connected", conn);

  bool genus_ok = false;
  if (conn) {
    genus_ok = genus_check(e);
    add("genus", genus_ok, genus_ok ? "" : "V - E + F != 2");
  } else {
    add("genus", false, "skipped: graph disconnected");
  }

  if (!simple && n >= 4) {
    auto cut = check_three_connected(e);
    add("three_connected", !cut,
        cut ? "separating pair (" + std::to_string(cut->first) + "," +
                  std::to_string(cut->second) + ")"
            : "");
  } else {
    add("three_connected", false,
        n < 4 ? "fewer than 4 vertices" : "skipped: graph not simple");
  }

  int min_deg = n > 0 ? e.degree(0) : 0;
  for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, e.degree(v));
  add("min_degree", min_deg >= 3, min_deg >= 3 ? "" : "degree " + std::to_string(min_deg));

  if (conn && genus_ok) {
    FaceSet fs = trace_faces(e);
    int min_face = fs.count() ? fs.faces[0].size() : 0;
    for (const Face& f : fs.faces) min_face = std::min(min_face, f.size());
    add("min_face_size", min_face >= 3,
        min_face >= 3 ? "" : "face of size " + std::to_string(min_face));
  } else {
    add("min_face_size", false, "skipped: faces undefined");
  }

  return report;
}

PolyhedralGraph validate_polyhedral(const Embedding& e) {
  ValidationReport report = validate(e);
  if (!report.ok()) throw ValidationError(std::move(report));
  FaceSet faces = trace_faces(e);
  GraphProfile profile = build_profile(e, faces);
  return PolyhedralGraph(e, std::move(faces), std::move(profile));
}

}  // namespace polycensus
