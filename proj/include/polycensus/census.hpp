#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polycensus/enumeration.hpp"
#include "polycensus/validity.hpp"

namespace polycensus {

/// One enumerated combinatorial type.  Every field is re-derivable from the
/// code alone; re-deriving reproduces the record byte for byte.
struct CensusRecord {
  CanonicalCode code;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  std::map<int, int> v_k;
  std::map<int, int> f_k;
  int rigid = 0;
  int nonrigid = 0;
  std::vector<int> totally_triangular;
  bool reducible = false;
  std::vector<CanonicalCode> factors;  // irreducible factors; empty if irreducible
};

CensusRecord census_record(const CanonicalCode& code);
nlohmann::ordered_json record_json(const CensusRecord& r);

struct CensusFilter {
  std::optional<int> rigid;
  bool irreducible_only = false;
};

/// One record per enumerated type passing the filter, sorted by
/// (vertices, code).  Reducibility is only computed when the filter needs it
/// or the record is emitted.
std::vector<CensusRecord> census(const EnumerationRun& run, const CensusFilter& filter = {},
                                 int workers = 0);

enum class ClaimStatus { passed, failed, skipped };

struct ClaimResult {
  std::string id;
  std::string range;
  ClaimStatus status = ClaimStatus::skipped;
  std::string detail;
  std::vector<std::string> witnesses;  // codes violating the claim; expected empty
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  bool all_passed() const;  // no claim failed (skipped-for-range is not failure)
};

/// Machine-checks the classification statements within the run's range:
/// no type has fewer than 4 rigid vertices; exactly the tetrahedron has 4;
/// exactly the 4-pyramid and 3-bipyramid have 5; every type with at most 8
/// vertices is totally rigid while the doubly stacked prism on 9 vertices is
/// not; the types with 6 rigid vertices are the six non-prism 6-vertex types
/// plus the prism stacks; the identity and angle suites hold corpus-wide; and
/// the enumerator agrees with the independent oracle up to 7 vertices (8 with
/// long_checks).  Universally quantified statements are reported as verified
/// up to the run's range, never as proven.
VerificationReport verify(const EnumerationRun& run, bool long_checks = false,
                          int workers = 0);

}  // namespace polycensus
