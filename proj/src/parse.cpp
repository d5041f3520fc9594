#include "binres/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "binres/error.hpp"

namespace binres {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Tokenizer {
  std::string s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
    if (start == i) fail(ErrorKind::Input, "expected identifier in '" + s + "'");
    return s.substr(start, i - start);
  }
  Int integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (start == i || (i - start == 1 && !std::isdigit((unsigned char)s[start])))
      fail(ErrorKind::Input, "expected integer in '" + s + "'");
    return Int(s.substr(start, i - start));
  }
};

int var_index(const std::vector<std::string>& names, const std::string& name,
              const std::string& ctx) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    fail(ErrorKind::Input, "undeclared variable '" + name + "' in '" + ctx + "'");
  return (int)(it - names.begin());
}

/// term := [rational *] factor { * factor } ; factor := name [^ exp]
RawTerm parse_one_term(Tokenizer& tk, const std::vector<std::string>& names, long long p) {
  RawTerm t;
  t.expo = Exponents(names.size());
  Rational coef = 1;
  bool any = false;
  for (;;) {
    char c = tk.peek();
    if (std::isdigit((unsigned char)c)) {
      Int num = tk.integer();
      Int den = 1;
      if (tk.accept('/')) den = tk.integer();
      if (den == 0) fail(ErrorKind::Input, "zero denominator in '" + tk.s + "'");
      coef *= Rational(num, den);
      any = true;
    } else if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name = tk.ident();
      int v = var_index(names, name, tk.s);
      Rational e = 1;
      if (tk.accept('^')) {
        bool paren = tk.accept('(');
        e = Rational(tk.integer());
        if (paren && !tk.accept(')')) fail(ErrorKind::Input, "missing ')' in '" + tk.s + "'");
      }
      t.expo[(std::size_t)v] += e;
      any = true;
    } else {
      fail(ErrorKind::Input, "unexpected character '" + std::string(1, c) + "' in '" + tk.s + "'");
    }
    if (!tk.accept('*')) break;
  }
  if (!any) fail(ErrorKind::Input, "empty term in '" + tk.s + "'");
  t.coef = FieldElement::from_rational(p, coef);
  return t;
}

}  // namespace

std::vector<RawTerm> parse_terms(const std::string& src, const std::vector<std::string>& names,
                                 long long p) {
  Tokenizer tk{src};
  std::vector<RawTerm> terms;
  bool negate = tk.accept('-');
  for (;;) {
    RawTerm t = parse_one_term(tk, names, p);
    if (negate) t.coef = -t.coef;
    if (t.coef.is_zero()) fail(ErrorKind::Input, "zero coefficient in '" + src + "'");
    terms.push_back(std::move(t));
    if (tk.eof()) break;
    if (tk.accept('+')) negate = false;
    else if (tk.accept('-')) negate = true;
    else fail(ErrorKind::Input, "expected '+' or '-' in '" + src + "'");
    if (terms.size() == 2)
      fail(ErrorKind::Input, "more than two terms in '" + src + "': not binomial");
  }
  return terms;
}

IdealFile parse_ideal_file(const std::string& text) {
  IdealFile f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_char = false, saw_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string::size_type colon = line.find(':');
    std::string head = line.substr(0, colon == std::string::npos ? 0 : colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    std::string rest = colon == std::string::npos ? "" : line.substr(colon + 1);
    if (head.empty()) {
      if (!std::all_of(line.begin(), line.end(), ::isspace))
        fail(ErrorKind::Input, "line " + std::to_string(lineno) + ": expected 'key: value'");
      continue;
    }
    std::istringstream ws(rest);
    if (head == "char") {
      if (!(ws >> f.characteristic) || (f.characteristic != 0 && !is_prime(f.characteristic)))
        fail(ErrorKind::Input,
             "line " + std::to_string(lineno) + ": characteristic must be 0 or prime");
      saw_char = true;
    } else if (head == "vars") {
      std::string v;
      while (ws >> v) f.vars.push_back(v);
      saw_vars = true;
    } else if (head == "invertible") {
      std::string v;
      while (ws >> v) f.invertible.push_back(v);
    } else if (head == "gen") {
      std::string g = rest;
      if (std::all_of(g.begin(), g.end(), ::isspace))
        fail(ErrorKind::Input, "line " + std::to_string(lineno) + ": empty generator");
      f.gens_src.push_back(g);
    } else {
      fail(ErrorKind::Input, "line " + std::to_string(lineno) + ": unknown key '" + head + "'");
    }
  }
  if (!saw_char || !saw_vars) fail(ErrorKind::Input, "missing 'char:' or 'vars:' line");
  if (f.vars.empty()) fail(ErrorKind::Input, "no variables declared");
  std::vector<std::string> sorted = f.vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::Input, "duplicate variable name");
  if (f.gens_src.empty()) fail(ErrorKind::Input, "no generators");
  return f;
}

Chart chart_from_file(const IdealFile& f) {
  Chart chart;
  chart.p = f.characteristic;
  for (const auto& name : f.vars) chart.vars.push_back({name, false, -1});
  for (const auto& name : f.invertible) {
    int v = var_index(f.vars, name, "invertible:");
    chart.vars[(std::size_t)v].is_y = true;
  }
  std::vector<char> is_y = chart.y_mask();
  chart.ideal.mpart = Exponents(chart.dim());
  for (std::size_t k = 0; k < f.gens_src.size(); ++k) {
    std::vector<RawTerm> terms = parse_terms(f.gens_src[k], f.vars, f.characteristic);
    chart.ideal.gens.push_back(normalize_generator(terms, is_y));
    chart.gen_origin.push_back((int)k);
  }
  chart.total_gens = chart.ideal.gens;
  chart.lineage = Lineage{};
  return detect_hyperbolic_and_relabel(std::move(chart));
}

Chart parse_ideal(const std::string& text) { return chart_from_file(parse_ideal_file(text)); }

}  // namespace binres
