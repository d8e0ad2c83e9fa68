#pragma once

#include <string>
#include <vector>

namespace bicon {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural property suite for the catalog at n: class count against the
/// known counts, oracle equivalence (n <= 7), reduction reachability,
/// closure of both growth operations, edge removal, the degree-2 /
/// subtraction dichotomy, and the biconnectivity cross-checks.
/// Requires 2 <= n <= 8.
std::vector<CheckResult> run_verification(int n, int jobs = 1);

}  // namespace bicon
