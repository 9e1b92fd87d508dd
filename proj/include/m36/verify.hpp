#pragma once

// The acceptance suite: eleven numbered checks shared by `m36 verify` and the
// acceptance test binary.

#include <string>
#include <vector>

#include "m36/quotient.hpp"

namespace m36 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  Mode mode = Mode::Exact;
  std::vector<CriterionResult> results;
  bool pass() const;
  std::string to_json() const;
  /// One "[PASS] 1 ranks: ..." line per criterion.
  std::string to_text() const;
};

/// Suite names: ranks, config-family, census, homology, psi-table, oracles,
/// picard, canonical, recursion, curves, properties.
std::vector<std::string> suite_names();

/// `suite` is "acceptance" for all eleven or one of suite_names(). `mode`
/// applies to the quotients built for the configuration family; the ranks
/// check always runs in both modes and everything else is exact. Throws
/// std::invalid_argument for an unknown suite.
VerifyReport run_verify(const std::string& suite, Mode mode);

}  // namespace m36
