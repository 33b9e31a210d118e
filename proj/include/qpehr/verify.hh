// Named brute-force verification suites. Each identity exhaustively checks
// one algebraic law over every object up to a size bound and reports the
// first counterexample if any. Suites: hopf, cointeraction, duality,
// characters, wqsym, paper-tables, and all (their concatenation).
#pragma once

#include <string>
#include <vector>

namespace qpehr {

struct IdentityResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string detail;  // first failing case; empty when pass
};

struct SuiteReport {
  std::string suite;
  std::vector<IdentityResult> identities;

  bool allPass() const;
  long totalCases() const;
};

// maxN <= 0 keeps every identity's default bound; a positive value lowers
// bounds that exceed it (it never raises a default).
SuiteReport runSuite(const std::string& name, int maxN = 0);

// The runnable suite names, "all" last.
std::vector<std::string> suiteNames();

}  // namespace qpehr
