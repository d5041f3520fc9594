#pragma once

#include <functional>

#include "binres/monomialize.hpp"
#include "binres/transform.hpp"
#include "binres/tree.hpp"

namespace binres {

enum class GoalKind { LocallyMonomial, LogResolution, Desingularization };

struct PipelineGoal {
  GoalKind kind = GoalKind::LocallyMonomial;
  int budget = 500;
};

/// Result of the tilde construction: hyperbolic generators relabeled and
/// erased from the pair ideal, or absent when nothing remains.
struct TildeResult {
  bool absent = false;
  Chart chart;                   // relabeled chart carrying the new pair ideal
  std::vector<int> erased;       // input-basis indices of the erased generators
};
TildeResult build_tilde(const Chart& chart);

/// E-resolution of one subtree at fixed control c: blow up EMaxB(t) until
/// every leaf has an empty E-singular locus. `stop` (optional) inspects the
/// would-be next invariant and returns true to halt the branch instead of
/// blowing up (used by the desingularization threshold).
void eresolve(ResolutionTree& tree, int id, const Rational& c,
              const std::function<bool(const InvariantValue&)>& stop = nullptr);

ResolutionTree make_tree(const Chart& root, int budget);

/// Algorithm: alternate E-resolution passes at c = max E-ord(J) with the
/// tilde restart until every leaf is locally monomial.
void run_locally_monomial(ResolutionTree& tree);

/// Locally monomial resolution, then per leaf the monomialization chart and
/// a second resolution until the total transform is one exceptional
/// monomial.
void run_log_resolution(ResolutionTree& tree);

struct DesingCertificate {
  bool certified = false;
  std::vector<std::string> checks;
  std::vector<std::string> violations;
};

/// Embedded desingularization: the pipeline with the second phase run at
/// control 1, stopping each branch when max t reaches (1,...,1,inf,...,inf);
/// certifies that no center met the E-regular locus of X and that the final
/// strict transform is regular with normal crossings.
DesingCertificate run_desingularization(ResolutionTree& tree);

/// Convenience wrappers building the tree from a root chart.
ResolutionTree locally_monomial_resolve(const Chart& root, const PipelineGoal& goal);
ResolutionTree log_resolve(const Chart& root, const PipelineGoal& goal);
std::pair<ResolutionTree, DesingCertificate> embedded_desingularize(const Chart& root,
                                                                    const PipelineGoal& goal);

struct CompatIssue {
  int node_a = -1, node_b = -1;
  std::string what;
};

struct CompatReport {
  std::vector<CompatIssue> issues;
  int pairs_checked = 0;
  bool ok() const { return issues.empty(); }
};

/// Prop-2.6 verification pass: on every sibling-pair overlap the monomial
/// transition map must carry one chart's next center (and tilde erasure set)
/// onto the other's.
CompatReport check_chart_compatibility(const ResolutionTree& tree);

}  // namespace binres
