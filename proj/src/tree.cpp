#include "binres/tree.hpp"

#include "binres/error.hpp"

namespace binres {

std::string status_str(NodeStatus s) {
  switch (s) {
    case NodeStatus::Active: return "active";
    case NodeStatus::ESingEmpty: return "esing-empty";
    case NodeStatus::LocallyMonomial: return "locally-monomial";
    case NodeStatus::LogResolved: return "log-resolved";
    case NodeStatus::Desingularized: return "desingularized";
  }
  return "?";
}

std::optional<NodeStatus> status_from_str(const std::string& s) {
  for (NodeStatus st : {NodeStatus::Active, NodeStatus::ESingEmpty, NodeStatus::LocallyMonomial,
                        NodeStatus::LogResolved, NodeStatus::Desingularized})
    if (status_str(st) == s) return st;
  return std::nullopt;
}

TreeNode& ResolutionTree::at(int id) {
  auto it = nodes.find(id);
  if (it == nodes.end()) fail(ErrorKind::Input, "unknown tree node " + std::to_string(id));
  return it->second;
}

const TreeNode& ResolutionTree::at(int id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) fail(ErrorKind::Input, "unknown tree node " + std::to_string(id));
  return it->second;
}

int ResolutionTree::add_node(TreeNode n) {
  int id = next_id++;
  n.chart.id = id;
  nodes.emplace(id, std::move(n));
  return id;
}

std::vector<int> ResolutionTree::leaves(int id) const {
  std::vector<int> out, stack{id};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    const TreeNode& n = at(cur);
    if (n.children.empty()) {
      out.push_back(cur);
    } else {
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
  }
  return out;
}

void ResolutionTree::charge_step() {
  if (steps >= budget)
    fail(ErrorKind::Budget, "blow-up budget exhausted after " + std::to_string(steps) + " steps");
  ++steps;
}

}  // namespace binres
