// Verification harness: machine-checks the built-in catalog and the
// published counting/class-group data against the library's computations.
#pragma once

#include <latgeo/catalog.hpp>

#include <string>
#include <vector>

namespace latgeo {

struct ReportEntry {
  std::string id;        // entry id or check name
  std::string instance;  // parameter point (compact JSON), may be empty
  bool pass = false;
  std::string detail;    // expected/computed summary or failure reason
  double millis = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

/// Sporadic count table, strip counts, sporadic bound, structure theorem.
VerificationReport verify_kempty();

/// Closed-form lemma predicates against the polytope brute force.
VerificationReport verify_lemmas();

/// Toric catalog: canonicity/terminality and class-group data.
VerificationReport verify_toric();

/// Matrix catalog: normal form, verdicts, terminality set, negative controls.
VerificationReport verify_catalog();

/// suite in {"kempty", "lemmas", "toric", "catalog", "all"}.
std::vector<VerificationReport> verify_paper(const std::string& suite);

/// Comparison helper for degree rows: equal up to a unit factor mod the
/// modulus and a simultaneous permutation of the variables.
bool q_row_matches(const IntVec& computed, const IntVec& expected, const BigInt& modulus);

}  // namespace latgeo
