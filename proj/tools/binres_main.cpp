#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "binres/corpus.hpp"
#include "binres/emit.hpp"
#include "binres/error.hpp"
#include "binres/parse.hpp"
#include "binres/verify.hpp"

namespace {

using namespace binres;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Input, "cannot write " + path);
  out << data;
}

EmitFormat parse_format(const std::string& s) {
  if (s == "json") return EmitFormat::Json;
  if (s == "dot") return EmitFormat::Dot;
  if (s == "text") return EmitFormat::Text;
  fail(ErrorKind::Input, "unknown emit format: " + s);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

int run_pipeline(GoalKind kind, const std::string& input, const std::string& emit,
                 const std::string& out, int max_steps, const std::string& goal_name) {
  Chart root = parse_ideal(slurp(input));
  ResolutionTree tree = make_tree(root, max_steps);
  DesingCertificate cert;
  bool budget_hit = false;
  std::string budget_msg;
  try {
    switch (kind) {
      case GoalKind::LocallyMonomial: run_locally_monomial(tree); break;
      case GoalKind::LogResolution:
        if (root.ideal.is_unit()) fail(ErrorKind::Input, "unit ideal: nothing to resolve");
        run_log_resolution(tree);
        break;
      case GoalKind::Desingularization: cert = run_desingularization(tree); break;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    budget_hit = true;
    budget_msg = e.what();
  }
  const DesingCertificate* cp = kind == GoalKind::Desingularization && !budget_hit ? &cert : nullptr;
  write_out(out, emit_tree(tree, parse_format(emit), goal_name, cp));
  if (budget_hit) {
    std::cerr << "error: " << budget_msg << " (partial tree emitted)\n";
    return 3;
  }
  if (kind == GoalKind::Desingularization && !cert.certified) {
    for (const auto& v : cert.violations) std::cerr << "certification: " << v << "\n";
    return 1;
  }
  return 0;
}

int run_invariant(const std::string& input, const std::string& stratum_arg,
                  const std::string& control_arg) {
  Chart root = parse_ideal(slurp(input));
  std::vector<int> vars;
  std::stringstream ss(stratum_arg);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) continue;
    int pos = std::stoi(piece);
    if (pos < 1 || pos > (int)root.dim())
      fail(ErrorKind::Input, "stratum index out of range: " + piece);
    vars.push_back(pos - 1);
  }
  Stratum s{vars};
  for (int v : s.v)
    if (root.vars[(std::size_t)v].is_y)
      fail(ErrorKind::Input, "stratum touches an invertible variable");
  Rational c = control_arg.empty() ? etop(root.ideal, root.active_vars()).theta
                                   : parse_rational(control_arg);
  if (c <= 0) fail(ErrorKind::Input, "control must be positive");
  std::cout << resolution_function(root, s, c).str() << "\n";
  return 0;
}

int run_verify_file(const std::string& input) {
  LoadedTree loaded = load_tree_json(slurp(input));
  VerifyReport rep = verify_tree(loaded.tree, &loaded.stored_invariants);
  for (const auto& issue : rep.issues) std::cerr << "verify: " << issue << "\n";
  std::cout << (rep.ok() ? "OK" : "FAILED") << " (" << rep.checks << " checks, "
            << rep.issues.size() << " issues)\n";
  return rep.ok() ? 0 : 1;
}

int run_verify_corpus(std::uint64_t seed, int count, int max_steps) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    Chart root = corpus_ideal(seed, (std::uint64_t)i);
    ResolutionTree tree = make_tree(root, max_steps);
    try {
      run_locally_monomial(tree);
      VerifyReport rep = verify_tree(tree);
      if (!rep.ok()) {
        ++failures;
        for (const auto& issue : rep.issues)
          std::cerr << "corpus " << i << ": " << issue << "\n";
      }
    } catch (const Error& e) {
      ++failures;
      std::cerr << "corpus " << i << ": " << e.what() << "\n";
    }
  }
  std::cout << (failures == 0 ? "OK" : "FAILED") << " (" << count << " corpus runs, "
            << failures << " failures)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binres: combinatorial resolution of binomial ideals along E"};
  app.require_subcommand(1);

  std::string input, out, emit = "text", stratum, control;
  int max_steps = 500;
  std::uint64_t seed = 0;
  int count = 100;
  bool have_seed = false;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", input, "ideal file")->required();
    sub->add_option("--emit", emit, "output format: json|dot|text");
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_option("--max-steps", max_steps, "blow-up budget");
  };

  CLI::App* resolve = app.add_subcommand("resolve", "locally monomial resolution");
  add_common(resolve, true);
  CLI::App* logres = app.add_subcommand("logres", "log-resolution");
  add_common(logres, true);
  CLI::App* desing = app.add_subcommand("desing", "embedded desingularization with certificate");
  add_common(desing, true);

  CLI::App* invariant = app.add_subcommand("invariant", "resolution function at a stratum");
  invariant->add_option("input", input, "ideal file")->required();
  invariant->add_option("--stratum", stratum, "comma-separated 1-based variable positions")
      ->required();
  invariant->add_option("--control", control, "control c (default: max E-order)");

  CLI::App* verify = app.add_subcommand("verify", "re-check a serialized tree or a random corpus");
  verify->add_option("input", input, "tree.json produced by --emit json");
  verify->add_option("--seed", seed, "corpus mode: deterministic seed")
      ->check([&have_seed](const std::string&) {
        have_seed = true;
        return std::string();
      });
  verify->add_option("--count", count, "corpus mode: number of ideals");
  verify->add_option("--max-steps", max_steps, "blow-up budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (resolve->parsed())
      return run_pipeline(GoalKind::LocallyMonomial, input, emit, out, max_steps, "resolve");
    if (logres->parsed())
      return run_pipeline(GoalKind::LogResolution, input, emit, out, max_steps, "logres");
    if (desing->parsed())
      return run_pipeline(GoalKind::Desingularization, input, emit, out, max_steps, "desing");
    if (invariant->parsed()) return run_invariant(input, stratum, control);
    if (verify->parsed()) {
      if (have_seed) return run_verify_corpus(seed, count, max_steps);
      if (input.empty()) fail(ErrorKind::Input, "verify needs a tree file or --seed");
      return run_verify_file(input);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Input: return 2;
      case ErrorKind::Unsupported: return 2;
      case ErrorKind::Budget: return 3;
      case ErrorKind::Invariant: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
