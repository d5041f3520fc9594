#pragma once

#include <map>

#include "binres/driver.hpp"

namespace binres {

struct VerifyReport {
  std::vector<std::string> issues;
  int checks = 0;
  bool ok() const { return issues.empty(); }
};

/// Re-checks a resolution tree: generator grammar and class invariants,
/// center permissibility and reproducibility (recomputed EMaxB), strict
/// invariant decrease along blow-up edges within a pass, leaf-status
/// grammar, and chart compatibility. `stored_invariants`, when given, is
/// compared against the recomputed printed values.
VerifyReport verify_tree(const ResolutionTree& tree,
                         const std::map<int, std::string>* stored_invariants = nullptr);

}  // namespace binres
