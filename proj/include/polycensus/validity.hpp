#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycensus/embedding.hpp"
#include "polycensus/rigidity.hpp"

namespace polycensus {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // offending pair / duplicated edge / empty when passed
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string summary() const;
};

class ValidationError : public Error {
public:
  ValidationError(ValidationReport report)
      : Error(Errc::invalid_graph, report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// nullopt when simple; otherwise the offending vertex pair (v, v) for a loop
/// or the endpoints of a duplicated edge.
std::optional<std::pair<int, int>> check_simple(const Embedding& e);

/// nullopt when 3-connected; otherwise the lexicographically first separating
/// pair.  Brute-force pair deletion is the reference semantics.  Throws
/// Errc::too_small below 4 vertices.  Requires a simple embedding.
std::optional<std::pair<int, int>> check_three_connected(const Embedding& e);

ValidationReport validate(const Embedding& e);

/// A validated polyhedral graph: simple, 3-connected, sphere-embedded, with
/// faces and profile cached.  Immutable and parallel-safe.
class PolyhedralGraph {
public:
  const Embedding& embedding() const { return emb_; }
  const FaceSet& faces() const { return faces_; }
  const GraphProfile& profile() const { return profile_; }

  int vertex_count() const { return emb_.vertex_count(); }
  int edge_count() const { return emb_.edge_count(); }
  int face_count() const { return faces_.count(); }

  CanonicalCode code() const { return canonical_code(emb_); }

private:
  friend PolyhedralGraph validate_polyhedral(const Embedding&);
  PolyhedralGraph(Embedding e, FaceSet f, GraphProfile p)
      : emb_(std::move(e)), faces_(std::move(f)), profile_(std::move(p)) {}

  Embedding emb_;
  FaceSet faces_;
  GraphProfile profile_;
};

/// Runs the full Steinitz battery (simple, connected, genus, 3-connected,
/// minimum size, minimum degree and face size) and returns the validated
/// graph.  Throws ValidationError listing every failed check.
PolyhedralGraph validate_polyhedral(const Embedding& e);

}  // namespace polycensus
