#pragma once

#include <string>

#include "binres/driver.hpp"

namespace binres {

enum class EmitFormat { Json, Dot, Text };

/// Deterministic serialization: identical trees produce identical bytes.
std::string emit_tree(const ResolutionTree& tree, EmitFormat format, const std::string& goal,
                      const DesingCertificate* cert = nullptr);

/// Tree rebuilt from JSON; recorded invariant strings are kept aside so the
/// verifier can compare them against recomputed values.
struct LoadedTree {
  ResolutionTree tree;
  std::map<int, std::string> stored_invariants;
};

LoadedTree load_tree_json(const std::string& text);

}  // namespace binres
