#include "binres/generator.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

namespace {

Exponents split_x(const Exponents& e, const std::vector<char>& is_y) {
  Exponents r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!is_y[i]) r[i] = e[i];
  return r;
}

Exponents split_y(const Exponents& e, const std::vector<char>& is_y) {
  Exponents r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    if (is_y[i]) r[i] = e[i];
  return r;
}

// Lexicographic comparison used only as a deterministic tie-break.
bool lex_less(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<RawTerm> Generator::terms() const {
  std::vector<RawTerm> ts;
  switch (kind) {
    case GenKind::Monomial:
      ts.push_back({FieldElement::one(coef.characteristic()), nu});
      break;
    case GenKind::Hyperbolic:
      ts.push_back({FieldElement::one(coef.characteristic()), nu});
      ts.push_back({-coef, nu + gamma});
      break;
    case GenKind::Binomial:
      ts.push_back({FieldElement::one(coef.characteristic()), nu + alpha + gamma});
      ts.push_back({-coef, nu + beta});
      break;
  }
  return ts;
}

bool Generator::operator==(const Generator& o) const {
  if (kind != o.kind || !(nu == o.nu)) return false;
  switch (kind) {
    case GenKind::Monomial: return true;
    case GenKind::Hyperbolic: return coef == o.coef && gamma == o.gamma;
    case GenKind::Binomial:
      return coef == o.coef && alpha == o.alpha && beta == o.beta && gamma == o.gamma;
  }
  return false;
}

Generator normalize_generator(std::vector<RawTerm> terms, const std::vector<char>& is_y) {
  // combine equal monomials, drop zero coefficients
  std::vector<RawTerm> ts;
  for (auto& t : terms) {
    bool merged = false;
    for (auto& u : ts) {
      if (u.expo == t.expo) {
        u.coef = u.coef + t.coef;
        merged = true;
        break;
      }
    }
    if (!merged) ts.push_back(t);
  }
  ts.erase(std::remove_if(ts.begin(), ts.end(),
                          [](const RawTerm& t) { return t.coef.is_zero(); }),
           ts.end());

  if (ts.empty()) fail(ErrorKind::Input, "zero polynomial is not a generator");
  if (ts.size() > 2) fail(ErrorKind::Input, "more than two terms: not binomial");

  const std::size_t n = ts[0].expo.size();
  for (const auto& t : ts) {
    Exponents x = split_x(t.expo, is_y);
    if (!x.nonnegative() || !x.integral())
      fail(ErrorKind::Input, "vanishable variables need nonnegative integer exponents");
  }

  if (ts.size() == 1) {
    // a single term is a monomial times a unit; invertible content drops
    Generator g;
    g.kind = GenKind::Monomial;
    g.nu = split_x(ts[0].expo, is_y);
    g.alpha = g.beta = g.gamma = Exponents(n);
    g.coef = FieldElement::one(ts[0].coef.characteristic());
    return g;
  }

  Exponents x1 = split_x(ts[0].expo, is_y), x2 = split_x(ts[1].expo, is_y);
  Exponents d1 = split_y(ts[0].expo, is_y), d2 = split_y(ts[1].expo, is_y);
  Exponents nu = Exponents::min(x1, x2);
  Exponents a1 = x1 - nu, a2 = x2 - nu;
  Rational s1 = a1.total(), s2 = a2.total();

  Generator g;
  g.nu = nu;
  if (s1 == 0 && s2 == 0) {
    // x-parts cancel: hyperbolic equation x^nu (1 - mu y^delta)
    g.kind = GenKind::Hyperbolic;
    g.alpha = g.beta = Exponents(n);
    g.gamma = d2 - d1;
    g.coef = -(ts[1].coef / ts[0].coef);
    if (lex_less(g.gamma, Exponents(n))) {
      // orient delta so its first nonzero entry is positive
      g.gamma = Exponents(n) - g.gamma;
      g.coef = g.coef.inverse();
    }
    if (g.coef.is_zero()) fail(ErrorKind::Input, "hyperbolic coefficient must be nonzero");
    return g;
  }
  if (s1 == 0 || s2 == 0) {
    // constant term against a monomial term: transient hyperbolic
    // x^nu (1 - mu x^a y^d); relabeling turns the x-support of a into y's
    std::size_t c = s1 == 0 ? 0 : 1, m = 1 - c;
    g.kind = GenKind::Hyperbolic;
    g.alpha = g.beta = Exponents(n);
    g.gamma = (c == 0 ? a2 : a1) + ((c == 0 ? d2 : d1) - (c == 0 ? d1 : d2));
    g.coef = -(ts[m].coef / ts[c].coef);
    return g;
  }

  // genuine binomial: order the terms so 0 < |alpha| <= |beta|
  std::size_t ia = 0, ib = 1;
  if (s2 < s1 || (s1 == s2 && lex_less(a2, a1))) std::swap(ia, ib);
  g.kind = GenKind::Binomial;
  g.alpha = ia == 0 ? a1 : a2;
  g.beta = ib == 0 ? a1 : a2;
  g.gamma = (ia == 0 ? d1 : d2) - (ib == 0 ? d1 : d2);
  g.coef = -(ts[ib].coef / ts[ia].coef);
  return g;
}

Generator renormalize(const Generator& g, const std::vector<char>& is_y) {
  return normalize_generator(g.terms(), is_y);
}

std::vector<Rational> term_degrees(const Generator& g, const std::vector<int>& vars) {
  std::vector<Rational> out;
  for (const auto& t : g.terms()) out.push_back(t.expo.degree(vars));
  return out;
}

std::string print_exponents(const Exponents& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] != 1) {
      if (is_integral(m[i]) && m[i] > 0)
        s += "^" + rat_str(m[i]);
      else
        s += "^(" + rat_str(m[i]) + ")";
    }
  }
  return s.empty() ? "1" : s;
}

std::string print_generator(const Generator& g, const std::vector<std::string>& names) {
  auto term_str = [&](const FieldElement& c, const Exponents& e) {
    std::string mono = print_exponents(e, names);
    if (c.is_one()) return mono;
    if (mono == "1") return c.str();
    return c.str() + "*" + mono;
  };
  auto ts = g.terms();
  if (ts.size() == 1) return term_str(ts[0].coef, ts[0].expo);
  // second coefficient is -coef by construction; print "a - coef*b"
  std::string rhs = term_str(g.coef, ts[1].expo);
  return term_str(ts[0].coef, ts[0].expo) + " - " + rhs;
}

}  // namespace binres
