#include "binres/verify.hpp"

#include <algorithm>

namespace binres {

namespace {

void check_generator_grammar(const Chart& ch, const Generator& g, int id, VerifyReport& rep) {
  std::vector<char> is_y = ch.y_mask();
  std::string where = "node " + std::to_string(id);
  auto flag = [&](const std::string& what) { rep.issues.push_back(where + ": " + what); };
  if (!g.nu.nonnegative() || !g.nu.integral()) flag("monomial part not in N^n");
  for (std::size_t i = 0; i < ch.dim(); ++i) {
    if (is_y[i] && (g.nu[i] != 0 || g.alpha[i] != 0 || g.beta[i] != 0))
      flag("vanishable exponent on an invertible variable");
    // a pure hyperbolic equation (no monomial factor) must be relabeled;
    // x^l(1 - mu x^d) with l != 0 has no Def-1.3 form and stays as written
    if (!is_y[i] && g.kind == GenKind::Hyperbolic && g.nu.is_zero() && g.gamma[i] != 0)
      flag("unrelabeled hyperbolic generator");
  }
  if (g.kind == GenKind::Binomial) {
    if (g.coef.is_zero()) flag("zero binomial coefficient");
    Rational sa = g.alpha.total(), sb = g.beta.total();
    if (!(sa > 0 && sa <= sb)) flag("binomial ordering 0 < |alpha| <= |beta| violated");
    for (std::size_t i = 0; i < ch.dim(); ++i)
      if (g.alpha[i] != 0 && g.beta[i] != 0) flag("alpha and beta supports not disjoint");
  }
  if (g.kind == GenKind::Hyperbolic && g.coef.is_zero()) flag("zero hyperbolic coefficient");
}

}  // namespace

VerifyReport verify_tree(const ResolutionTree& tree,
                         const std::map<int, std::string>* stored_invariants) {
  VerifyReport rep;
  for (const auto& [id, node] : tree.nodes) {
    const Chart& ch = node.chart;
    std::string where = "node " + std::to_string(id);

    for (const auto& g : ch.ideal.gens) check_generator_grammar(ch, g, id, rep);
    for (const auto& g : ch.total_gens) check_generator_grammar(ch, g, id, rep);
    if (!ch.ideal.mpart.supported_on([&] {
          std::vector<char> ok(ch.dim());
          for (std::size_t i = 0; i < ch.dim(); ++i)
            ok[i] = !ch.vars[i].is_y;
          return ok;
        }()))
      rep.issues.push_back(where + ": mpart touches invertible variables");
    ++rep.checks;

    // parent/child lineage consistency
    for (int c : node.children) {
      const TreeNode& child = tree.at(c);
      if (child.chart.lineage.parent != id)
        rep.issues.push_back(where + ": child lineage points elsewhere");
      if (child.chart.lineage.kind == LineageKind::Blowup) {
        if (!node.center)
          rep.issues.push_back(where + ": blow-up child without a recorded center");
        else if (!std::binary_search(node.center->vars.begin(), node.center->vars.end(),
                                     child.chart.lineage.exceptional_var))
          rep.issues.push_back(where + ": chart variable outside the recorded center");
      }
    }

    // recorded centers: permissible and reproducible
    if (node.center && node.control) {
      Stratum zs{node.center->vars};
      if (eord_ideal(ch.ideal, zs) < *node.control)
        rep.issues.push_back(where + ": recorded center is not permissible");
      EmaxbResult em = emaxb(ch, *node.control);
      if (!(Stratum(em.center.vars) == zs))
        rep.issues.push_back(where + ": recorded center differs from recomputed EMaxB");
      if (stored_invariants) {
        auto it = stored_invariants->find(id);
        if (it != stored_invariants->end() && it->second != em.tmax.str())
          rep.issues.push_back(where + ": recorded invariant differs from recomputed value");
      }
      if (node.tmax && compare(*node.tmax, em.tmax) != 0)
        rep.issues.push_back(where + ": recorded invariant differs from recomputed value");
      ++rep.checks;

      // strict decrease of (max t, attaining components) within the pass
      if (ch.lineage.kind == LineageKind::Blowup) {
        const TreeNode& parent = tree.at(ch.lineage.parent);
        if (parent.pass == node.pass && parent.center && parent.control &&
            *parent.control == *node.control) {
          EmaxbResult pm = emaxb(parent.chart, *parent.control);
          int cmp = compare(em.tmax, pm.tmax);
          if (cmp > 0 || (cmp == 0 && em.attaining_minimal >= pm.attaining_minimal))
            rep.issues.push_back(where + ": invariant did not drop under the blow-up");
          ++rep.checks;
        }
      }
    }

    // leaf grammar per status
    if (node.children.empty()) {
      if (node.status == NodeStatus::LocallyMonomial && !is_locally_monomial(ch))
        rep.issues.push_back(where + ": leaf marked locally monomial fails the grammar");
      if (node.status == NodeStatus::LogResolved && !is_log_resolved(ch))
        rep.issues.push_back(where + ": leaf marked log-resolved fails the check");
      if (node.status == NodeStatus::Active)
        rep.issues.push_back(where + ": unfinished leaf in a final tree");
      ++rep.checks;
    }
  }

  CompatReport compat = check_chart_compatibility(tree);
  rep.checks += compat.pairs_checked;
  for (const auto& issue : compat.issues)
    rep.issues.push_back("nodes " + std::to_string(issue.node_a) + "/" +
                         std::to_string(issue.node_b) + ": " + issue.what);
  return rep;
}

}  // namespace binres
