#include "binres/emit.hpp"

#include <sstream>

#include <json.hpp>

#include "binres/error.hpp"
#include "binres/parse.hpp"

namespace binres {

namespace {

using nlohmann::json;

json chart_vars_json(const Chart& ch) {
  json out = json::array();
  for (const auto& v : ch.vars) {
    json jv;
    jv["name"] = v.name;
    jv["invertible"] = v.is_y;
    if (v.age >= 0) jv["age"] = v.age;
    if (v.was_exceptional) jv["was_exceptional"] = true;
    if (v.z_coordinate) jv["z"] = true;
    out.push_back(jv);
  }
  return out;
}

json names_of(const Chart& ch, const std::vector<int>& idx) {
  json out = json::array();
  for (int i : idx) out.push_back(ch.vars[(std::size_t)i].name);
  return out;
}

json node_json(const TreeNode& n) {
  const Chart& ch = n.chart;
  std::vector<std::string> names = ch.names();
  json j;
  j["id"] = ch.id;
  switch (ch.lineage.kind) {
    case LineageKind::Root: j["kind"] = "root"; break;
    case LineageKind::Blowup: j["kind"] = "blowup"; break;
    case LineageKind::Monomialization: j["kind"] = "zphase"; break;
  }
  if (ch.lineage.kind != LineageKind::Root) j["parent"] = ch.lineage.parent;
  if (ch.lineage.kind == LineageKind::Blowup)
    j["exceptional_var"] = names[(std::size_t)ch.lineage.exceptional_var];
  if (n.center) j["center"] = names_of(ch, n.center->vars);
  j["status"] = status_str(n.status);
  j["pass"] = n.pass;
  j["depth"] = n.depth;
  j["vars"] = chart_vars_json(ch);
  j["mpart"] = print_exponents(ch.ideal.mpart, names);
  json gens = json::array();
  for (const auto& g : ch.ideal.gens) gens.push_back(print_generator(g, names));
  j["ideal"] = gens;
  json totals = json::array();
  for (const auto& g : ch.total_gens) totals.push_back(print_generator(g, names));
  j["total"] = totals;
  j["origin"] = ch.gen_origin;
  j["E"] = names_of(ch, ch.e_list());
  j["H"] = names_of(ch, ch.h_list());
  if (n.tmax) j["max_invariant"] = n.tmax->str();
  if (n.control) j["control"] = rat_str(*n.control);
  if (!n.tilde_erased.empty()) j["tilde_erased"] = n.tilde_erased;
  j["children"] = n.children;
  return j;
}

std::string emit_json(const ResolutionTree& tree, const std::string& goal,
                      const DesingCertificate* cert) {
  json j;
  long long p = tree.nodes.empty() ? 0 : tree.at(tree.root).chart.p;
  j["meta"] = {{"char", p},
               {"goal", goal},
               {"steps", tree.steps},
               {"budget", tree.budget},
               {"next_age", tree.next_age}};
  j["root"] = tree.root;
  json nodes = json::array();
  for (const auto& [id, n] : tree.nodes) nodes.push_back(node_json(n));
  j["nodes"] = nodes;
  if (cert) {
    json jc;
    jc["certified"] = cert->certified;
    jc["checks"] = cert->checks;
    jc["violations"] = cert->violations;
    j["certificate"] = jc;
  }
  return j.dump(2) + "\n";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string emit_dot(const ResolutionTree& tree) {
  std::ostringstream os;
  os << "digraph restree {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& [id, n] : tree.nodes) {
    std::string label = "#" + std::to_string(id) + "\\n" + status_str(n.status);
    if (n.tmax) label += "\\nt = " + dot_escape(n.tmax->str());
    if (n.center) {
      label += "\\nZ = V(";
      for (std::size_t k = 0; k < n.center->vars.size(); ++k) {
        if (k) label += ",";
        label += dot_escape(n.chart.vars[(std::size_t)n.center->vars[k]].name);
      }
      label += ")";
    }
    os << "  n" << id << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [id, n] : tree.nodes) {
    for (int c : n.children) {
      const Chart& ch = tree.at(c).chart;
      std::string elabel = ch.lineage.kind == LineageKind::Monomialization
                               ? "z"
                               : dot_escape(ch.vars[(std::size_t)ch.lineage.exceptional_var].name);
      os << "  n" << id << " -> n" << c << " [label=\"" << elabel << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

void emit_text_node(const ResolutionTree& tree, int id, int indent, std::ostringstream& os) {
  const TreeNode& n = tree.at(id);
  const Chart& ch = n.chart;
  std::vector<std::string> names = ch.names();
  os << std::string((std::size_t)indent * 2, ' ') << "#" << id;
  if (ch.lineage.kind == LineageKind::Blowup)
    os << " [chart " << names[(std::size_t)ch.lineage.exceptional_var] << "]";
  if (ch.lineage.kind == LineageKind::Monomialization) os << " [z-phase]";
  os << " " << status_str(n.status);
  os << "  M=" << print_exponents(ch.ideal.mpart, names) << "  I=<";
  for (std::size_t k = 0; k < ch.ideal.gens.size(); ++k) {
    if (k) os << ", ";
    os << print_generator(ch.ideal.gens[k], names);
  }
  os << ">";
  if (n.tmax) os << "  t=" << n.tmax->str();
  if (n.center) {
    os << "  Z=V(";
    for (std::size_t k = 0; k < n.center->vars.size(); ++k) {
      if (k) os << ",";
      os << names[(std::size_t)n.center->vars[k]];
    }
    os << ")";
  }
  os << "\n";
  for (int c : n.children) emit_text_node(tree, c, indent + 1, os);
}

std::string emit_text(const ResolutionTree& tree, const DesingCertificate* cert) {
  std::ostringstream os;
  os << "resolution tree: " << tree.nodes.size() << " charts, " << tree.steps << " blow-ups\n";
  emit_text_node(tree, tree.root, 0, os);
  if (cert) {
    os << (cert->certified ? "certificate: OK\n" : "certificate: FAILED\n");
    for (const auto& c : cert->checks) os << "  " << c << "\n";
    for (const auto& v : cert->violations) os << "  violation: " << v << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_tree(const ResolutionTree& tree, EmitFormat format, const std::string& goal,
                      const DesingCertificate* cert) {
  switch (format) {
    case EmitFormat::Json: return emit_json(tree, goal, cert);
    case EmitFormat::Dot: return emit_dot(tree);
    case EmitFormat::Text: return emit_text(tree, cert);
  }
  return "";
}

LoadedTree load_tree_json(const std::string& text) {
  json j = json::parse(text, nullptr, true, true);
  LoadedTree out;
  ResolutionTree& tree = out.tree;
  tree.root = j.at("root").get<int>();
  tree.steps = j.at("meta").at("steps").get<int>();
  tree.budget = j.at("meta").at("budget").get<int>();
  tree.next_age = j.at("meta").at("next_age").get<int>();
  long long p = j.at("meta").at("char").get<long long>();

  for (const auto& jn : j.at("nodes")) {
    TreeNode n;
    Chart& ch = n.chart;
    ch.p = p;
    ch.id = jn.at("id").get<int>();
    std::string kind = jn.at("kind").get<std::string>();
    ch.lineage.kind = kind == "root" ? LineageKind::Root
                      : kind == "blowup" ? LineageKind::Blowup
                                         : LineageKind::Monomialization;
    if (jn.contains("parent")) ch.lineage.parent = jn.at("parent").get<int>();
    for (const auto& jv : jn.at("vars")) {
      VariableInfo v;
      v.name = jv.at("name").get<std::string>();
      v.is_y = jv.at("invertible").get<bool>();
      v.age = jv.contains("age") ? jv.at("age").get<int>() : -1;
      v.was_exceptional = jv.contains("was_exceptional") && jv.at("was_exceptional").get<bool>();
      v.z_coordinate = jv.contains("z") && jv.at("z").get<bool>();
      ch.vars.push_back(v);
    }
    std::vector<std::string> names = ch.names();
    std::vector<char> is_y = ch.y_mask();
    if (jn.contains("exceptional_var")) {
      std::string ev = jn.at("exceptional_var").get<std::string>();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == ev) ch.lineage.exceptional_var = (int)i;
    }
    auto name_index = [&](const std::string& nm) {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == nm) return (int)i;
      fail(ErrorKind::Input, "unknown variable in tree file: " + nm);
      return -1;
    };
    if (jn.contains("center")) {
      Center c;
      for (const auto& nm : jn.at("center")) c.vars.push_back(name_index(nm.get<std::string>()));
      std::sort(c.vars.begin(), c.vars.end());
      n.center = c;
    }
    // mpart: a monomial term over the names
    ch.ideal.mpart = Exponents(ch.dim());
    std::string mp = jn.at("mpart").get<std::string>();
    if (mp != "1") {
      std::vector<RawTerm> ts = parse_terms(mp, names, p);
      if (ts.size() != 1) fail(ErrorKind::Input, "bad mpart in tree file");
      ch.ideal.mpart = ts[0].expo;
    }
    for (const auto& gs : jn.at("ideal"))
      ch.ideal.gens.push_back(normalize_generator(parse_terms(gs.get<std::string>(), names, p), is_y));
    for (const auto& gs : jn.at("total"))
      ch.total_gens.push_back(normalize_generator(parse_terms(gs.get<std::string>(), names, p), is_y));
    for (const auto& o : jn.at("origin")) ch.gen_origin.push_back(o.get<int>());
    if (jn.contains("max_invariant"))
      out.stored_invariants[ch.id] = jn.at("max_invariant").get<std::string>();
    if (jn.contains("control")) {
      std::string c = jn.at("control").get<std::string>();
      auto slash = c.find('/');
      n.control = slash == std::string::npos
                      ? Rational(Int(c))
                      : Rational(Int(c.substr(0, slash)), Int(c.substr(slash + 1)));
    }
    if (jn.contains("tilde_erased"))
      for (const auto& round : jn.at("tilde_erased"))
        n.tilde_erased.push_back(round.get<std::vector<int>>());
    n.status = status_from_str(jn.at("status").get<std::string>())
                   .value_or(NodeStatus::Active);
    n.pass = jn.at("pass").get<int>();
    n.depth = jn.at("depth").get<int>();
    n.children = jn.at("children").get<std::vector<int>>();
    tree.nodes.emplace(ch.id, std::move(n));
    tree.next_id = std::max(tree.next_id, ch.id + 1);
  }
  // reconstruct parent lineage centers from the recorded centers
  for (auto& [id, n] : tree.nodes) {
    if (n.chart.lineage.kind == LineageKind::Blowup) {
      const TreeNode& parent = tree.at(n.chart.lineage.parent);
      if (parent.center) n.chart.lineage.center = parent.center->vars;
    }
  }
  return out;
}

}  // namespace binres
