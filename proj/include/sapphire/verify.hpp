#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sapphire {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure diagnostics; empty on pass
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  long failures() const;
};

// Invariant and oracle suite over the built-in parameter panel
// (1,2,-1,-1), (1,1,-2,-1), (3,2,-1,-1), (1,1,-5,-4). Covers the group law,
// Fox calculus, the resolution identities, the diagonal recursion, homology
// oracle values, duality numerics, the torsion-subquotient brute-force
// oracle, and the product identities that hold for the implemented diagonal.
// inject_fault flips one sign in d2 before checking; the suite must then
// report failures (negative control that the checks have teeth).
VerificationReport run_verification(std::uint64_t seed, bool inject_fault = false);

}  // namespace sapphire
