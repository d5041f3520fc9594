#pragma once

#include <map>
#include <optional>

#include "binres/invariant.hpp"

namespace binres {

enum class NodeStatus { Active, ESingEmpty, LocallyMonomial, LogResolved, Desingularized };

std::string status_str(NodeStatus s);
std::optional<NodeStatus> status_from_str(const std::string& s);

struct TreeNode {
  Chart chart;
  NodeStatus status = NodeStatus::Active;
  std::vector<int> children;
  std::optional<Center> center;        // next center chosen in this chart
  std::optional<InvariantValue> tmax;  // max invariant when the center was chosen
  int tmax_components = 1;             // minimal strata attaining tmax
  std::optional<Rational> control;     // control c in force at that moment
  std::vector<std::vector<int>> tilde_erased;  // input-basis indices erased per tilde round
  int pass = 0;   // driver pass counter (eresolve rounds and tilde/z restarts)
  int depth = 0;  // blow-ups below the root
};

/// Rooted tree of charts produced by successive blow-ups.
struct ResolutionTree {
  std::map<int, TreeNode> nodes;
  int root = 0;
  int next_id = 0;
  int next_age = 0;
  int steps = 0;   // blow-ups performed
  int budget = 500;

  TreeNode& at(int id);
  const TreeNode& at(int id) const;

  int add_node(TreeNode n);
  /// ids of leaves below `id` (or all leaves when id = root)
  std::vector<int> leaves(int id) const;

  void charge_step();
};

}  // namespace binres
