#include "binres/invariant.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

namespace {
const Rational kBottomSentinel = Rational(-1000000000);
}

GammaTriple GammaTriple::bottom() { return {kBottomSentinel, 0, {}}; }
bool GammaTriple::is_bottom() const { return negp == kBottomSentinel; }

std::string GammaTriple::str() const {
  if (is_bottom()) return "gamma(bottom)";
  std::string s = "gamma(" + rat_str(negp) + "," + rat_str(w) + ";";
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rho[i]);
  }
  return s + ")";
}

int compare(const GammaTriple& a, const GammaTriple& b) {
  if (a.negp != b.negp) return a.negp < b.negp ? -1 : 1;
  if (a.w != b.w) return a.w < b.w ? -1 : 1;
  if (a.rho != b.rho) return a.rho < b.rho ? -1 : 1;
  return 0;
}

std::string InvariantComponent::str() const {
  if (inf) return "inf";
  if (gamma) return gamma->str();
  return rat_str(q);
}

int compare(const InvariantComponent& a, const InvariantComponent& b) {
  if (a.inf || b.inf) {
    if (a.inf && b.inf) return 0;
    return a.inf ? 1 : -1;
  }
  if (a.q != b.q) return a.q < b.q ? -1 : 1;
  // q = 0 carries a Gamma on both sides; q > 0 carries none
  if (a.gamma && b.gamma) return compare(*a.gamma, *b.gamma);
  if (a.gamma || b.gamma)
    fail(ErrorKind::Invariant, "malformed invariant component mix");
  return 0;
}

std::string InvariantValue::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].str();
  }
  return s + ")";
}

int compare(const InvariantValue& a, const InvariantValue& b) {
  if (a.comps.size() != b.comps.size())
    fail(ErrorKind::Input, "invariant values of different length");
  for (std::size_t i = 0; i < a.comps.size(); ++i) {
    int c = compare(a.comps[i], b.comps[i]);
    if (c != 0) return c;
  }
  return 0;
}

Ideal companion(const Ideal& I, const Exponents& M, const Rational& theta, const Rational& c) {
  if (theta <= 0) fail(ErrorKind::Input, "companion ideal needs theta > 0");
  Ideal P;
  P.mpart = Exponents(I.nvars());
  P.gens = I.gens;
  if (theta >= c || M.is_zero()) return P;
  long long p = I.gens.empty() ? 0 : I.gens[0].coef.characteristic();
  Generator mg;
  mg.kind = GenKind::Monomial;
  mg.nu = M * (theta / (c - theta));
  mg.alpha = mg.beta = mg.gamma = Exponents(I.nvars());
  mg.coef = FieldElement::one(p);
  P.gens.push_back(mg);
  return P;
}

namespace {

/// How a generator attains the E-order at a stratum. Core-driven binomials
/// carry the order in their two-term core and demand the contact from the
/// order-witnessing side. Every other shape (hyperbolic equations
/// x^l(1 - ...), binomials whose core contributes nothing, plain monomials)
/// carries the order in a monomial factor: original variables of that
/// factor may serve as the contact, while exceptional content belongs to
/// the monomial invariant of the junior ideal and is avoided while any
/// choice remains.
struct ContactVote {
  bool core = false;  // core-driven binomial
  Stratum witness;    // admissible contacts (may be empty: no constraint)
};

ContactVote classify_vote(const Generator& g, const Stratum& s) {
  auto supp_in = [&](const Exponents& e) {
    std::vector<int> vs;
    for (int v : e.support())
      if (s.contains(v)) vs.push_back(v);
    return Stratum(vs);
  };
  if (g.kind == GenKind::Binomial) {
    Rational da = g.alpha.degree(s.v), db = g.beta.degree(s.v);
    if (da > 0 && db > 0) {
      if (da < db) return {true, supp_in(g.alpha)};
      if (db < da) return {true, supp_in(g.beta)};
      // tie: the contact must divide both order-witnessing core terms
      return {true, supp_in(g.alpha).intersect(supp_in(g.beta))};
    }
  }
  return {false, supp_in(g.nu)};
}

int contact_from(const Ideal& P, const std::vector<Stratum>& qualifying, const Stratum& top,
                 const std::vector<char>& exceptional) {
  Stratum common = top;
  for (const auto& q : qualifying) common = common.intersect(q);
  if (common.empty()) fail(ErrorKind::Invariant, "no coordinate maximal contact");

  Rational theta = eord_ideal(P, top);
  std::vector<ContactVote> votes;
  std::vector<char> binding;
  for (const auto& g : P.gens) {
    votes.push_back(classify_vote(g, top));
    binding.push_back(eord_generator(g, top) == theta);
  }
  auto strip_exc = [&](const Stratum& s) {
    std::vector<int> vs;
    for (int v : s.v)
      if (!exceptional[(std::size_t)v]) vs.push_back(v);
    return Stratum(vs);
  };
  // rank 0: core-driven; rank 1: monomial content with original variables;
  // rank 2: monomial content that is entirely exceptional
  auto rank_of = [&](std::size_t k) {
    if (votes[k].core) return 0;
    return strip_exc(votes[k].witness).empty() ? 2 : 1;
  };
  int best_rank = 3;
  for (std::size_t k = 0; k < votes.size(); ++k)
    if (binding[k]) best_rank = std::min(best_rank, rank_of(k));

  Stratum refined = common;
  bool voted = false;
  for (std::size_t k = 0; k < votes.size(); ++k) {
    if (!binding[k] || rank_of(k) != best_rank) continue;
    Stratum w = best_rank == 1 ? strip_exc(votes[k].witness) : votes[k].witness;
    if (w.empty()) continue;
    refined = refined.intersect(w);
    voted = true;
  }
  if (voted && !refined.empty()) return refined.v[0];

  // No coordinate serves every voter. Prefer contacts that eat the fewest
  // monomial factors (those must survive into the junior ideal, where the
  // monomial invariant accounts for them), then original variables.
  int best = common.v[0];
  std::vector<long long> best_score;
  for (int v : common.v) {
    long long s1 = 0, s2 = 0;
    for (std::size_t k = 0; k < votes.size(); ++k) {
      if (votes[k].core || !votes[k].witness.contains(v)) continue;
      (binding[k] ? s1 : s2) += 1;
    }
    std::vector<long long> score{s1, s2, exceptional[(std::size_t)v] ? 1 : 0, v};
    if (best_score.empty() || score < best_score) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

}  // namespace

int select_max_contact(const Ideal& P, const Rational& c, const std::vector<int>& active) {
  EtopResult top = etop(P, active);
  if (top.theta < c) fail(ErrorKind::Input, "maximal contact needs etop(P) >= c");
  std::vector<Stratum> strata = esing_all(P, active, top.theta);
  if (strata.empty()) fail(ErrorKind::Input, "empty E-singular locus for contact selection");
  return contact_from(P, strata, Stratum(active));
}

int select_max_contact_local(const Ideal& P, const Stratum& s) {
  Rational theta = eord_ideal(P, s);
  if (theta <= 0) fail(ErrorKind::Input, "local maximal contact needs positive E-order");
  return contact_from(P, esing_all(P, s.v, theta), s);
}

Ideal ecoeff(const Ideal& P, const Rational& c, int j, const std::vector<char>& y_mask) {
  const std::size_t n = P.nvars();
  long long p = P.gens.empty() ? 0 : P.gens[0].coef.characteristic();
  std::vector<Exponents> monos;
  auto emit = [&](Exponents xpart) {
    Rational k = xpart[(std::size_t)j];
    if (k >= c) return;
    xpart[(std::size_t)j] = 0;
    Exponents weighted = xpart * (c / (c - k));
    for (const auto& m : monos)
      if (m == weighted) return;
    monos.push_back(weighted);
  };
  for (const auto& g : P.gens) {
    if (g.kind == GenKind::Hyperbolic && g.nu.is_zero()) continue;
    for (const auto& t : g.terms()) {
      Exponents xpart(n);
      for (std::size_t i = 0; i < n; ++i)
        if (!y_mask[i]) xpart[i] = t.expo[i];
      emit(std::move(xpart));
    }
  }
  if (monos.empty()) return Ideal::unit(n, p);
  Ideal out;
  out.mpart = Exponents(n);
  for (auto& m : monos) {
    Generator g;
    g.kind = GenKind::Monomial;
    g.nu = m;
    g.alpha = g.beta = g.gamma = Exponents(n);
    g.coef = FieldElement::one(p);
    out.gens.push_back(g);
  }
  return out;
}

std::optional<std::pair<GammaTriple, std::vector<int>>> gamma_value(
    const Exponents& M, const Rational& c, const std::vector<VariableInfo>& vars) {
  std::vector<int> supp = M.support();
  const std::size_t k = supp.size();
  if (k > 24) fail(ErrorKind::Unsupported, "divisor support too large");
  long long best_p = -1;
  Rational best_w = 0;
  std::vector<int> best_rho, best_vars;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> vs;
    Rational sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        vs.push_back(supp[i]);
        sum += M[(std::size_t)supp[i]];
      }
    }
    if (sum < c) continue;
    long long pc = (long long)vs.size();
    Rational w = sum / c;
    std::vector<int> rho;
    for (int v : vs) {
      if (vars[(std::size_t)v].age < 0)
        fail(ErrorKind::Invariant, "Gamma over a non-exceptional divisor");
      rho.push_back(vars[(std::size_t)v].age);
    }
    std::sort(rho.rbegin(), rho.rend());
    bool better;
    if (best_p < 0) better = true;
    else if (pc != best_p) better = pc < best_p;
    else if (w != best_w) better = w > best_w;
    else better = rho > best_rho;
    if (better) {
      best_p = pc;
      best_w = w;
      best_rho = rho;
      best_vars = vs;
    }
  }
  if (best_p < 0) return std::nullopt;
  GammaTriple g{Rational(-best_p), best_w, best_rho};
  std::sort(best_vars.begin(), best_vars.end());
  return std::make_pair(g, best_vars);
}

Descent descend(const Chart& chart, const Stratum& s, const Rational& c) {
  const std::size_t n = chart.dim();
  const std::vector<char> exc = chart.exc_mask();
  const std::vector<char> y_mask = chart.y_mask();

  Descent d;
  Ideal J = chart.ideal;
  Stratum cur = s;
  Rational control = c;
  std::vector<int> remaining = chart.active_vars();

  auto pad = [&]() {
    while (d.t.comps.size() < n) d.t.comps.push_back(InvariantComponent::infinity());
  };

  for (std::size_t level = 0; level < n; ++level) {
    J = refactorize(J, exc);
    Ideal I;
    I.mpart = Exponents(n);
    I.gens = J.gens;
    Rational theta = eord_ideal(I, cur);

    DescentLevel rec;
    rec.I_part = I;
    rec.M_part = J.mpart;
    rec.theta = theta;
    rec.remaining = remaining;

    if (theta == 0) {
      Exponents Mres = J.mpart.restricted([&] {
        std::vector<char> m(n, 0);
        for (int v : cur.v) m[(std::size_t)v] = 1;
        return m;
      }());
      auto g = gamma_value(Mres, control, chart.vars);
      if (g) {
        d.t.comps.push_back(InvariantComponent::monomial(g->first));
        for (int v : g->second) d.center.push_back(v);
        d.levels.push_back(rec);
        pad();
        return d;
      }
      if (I.has_unit_gen()) {
        // J_i = 1: nothing left to resolve in this flag
        d.t.comps.push_back(InvariantComponent::infinity());
      } else {
        // stratum too shallow for this level's control; can never win
        d.t.comps.push_back(InvariantComponent::monomial(GammaTriple::bottom()));
      }
      d.levels.push_back(rec);
      pad();
      return d;
    }

    d.t.comps.push_back(InvariantComponent::finite(theta / control));
    Ideal P = companion(I, J.mpart, theta, control);
    Rational cnext = eord_ideal(P, cur);
    int contact = select_max_contact_local(P, cur);
    rec.contact = contact;
    d.center.push_back(contact);
    d.levels.push_back(rec);

    if (level + 1 == n) return d;
    J = ecoeff(P, cnext, contact, y_mask);
    cur = cur.minus(contact);
    control = cnext;
    remaining.erase(std::remove(remaining.begin(), remaining.end(), contact), remaining.end());
  }
  pad();
  return d;
}

InvariantValue resolution_function(const Chart& chart, const Stratum& s, const Rational& c) {
  if (eord_ideal(chart.ideal, s) < c)
    fail(ErrorKind::Input, "resolution function undefined below the control");
  return descend(chart, s, c).t;
}

EmaxbResult emaxb(const Chart& chart, const Rational& c) {
  std::vector<int> active = chart.active_vars();
  std::vector<Stratum> strata = esing_all(chart.ideal, active, c);
  if (strata.empty()) fail(ErrorKind::Input, "empty E-singular locus");

  std::vector<Descent> descents;
  descents.reserve(strata.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    descents.push_back(descend(chart, strata[i], c));
    if (i > 0 && compare(descents[i].t, descents[best].t) > 0) best = i;
  }

  // minimal strata of the attaining set; the smallest is the component of
  // EMaxB(t) blown up next (ties are symmetric and handled one at a time)
  std::vector<std::size_t> attaining;
  for (std::size_t i = 0; i < strata.size(); ++i)
    if (compare(descents[i].t, descents[best].t) == 0) attaining.push_back(i);
  std::vector<std::size_t> minimal;
  for (std::size_t i : attaining) {
    bool has_smaller = false;
    for (std::size_t j : attaining)
      if (j != i && strata[j].subset_of(strata[i]) && !(strata[j] == strata[i]))
        has_smaller = true;
    if (!has_smaller) minimal.push_back(i);
  }
  std::size_t win = minimal[0];
  for (std::size_t i : minimal) {
    if (strata[i].v.size() < strata[win].v.size() ||
        (strata[i].v.size() == strata[win].v.size() && strata[i].v < strata[win].v))
      win = i;
  }

  // the realizing flag lives inside the center
  Stratum chain{descents[win].center};
  if (!chain.subset_of(strata[win]))
    fail(ErrorKind::Invariant, "descent flag escapes the attaining stratum");

  // Etop chain: the center lies in the E-top locus of every I_i of the
  // winning descent
  for (const auto& lev : descents[win].levels) {
    if (lev.theta <= 0) continue;
    std::vector<char> supp = lev.I_part.support_mask();
    std::vector<int> act;
    for (int v : lev.remaining)
      if (supp[(std::size_t)v]) act.push_back(v);
    Stratum zs = strata[win].intersect(Stratum(act));
    if (eord_ideal(lev.I_part, zs) != etop(lev.I_part, act).theta)
      fail(ErrorKind::Invariant, "center leaves the E-top locus of a descent level");
  }

  EmaxbResult r;
  r.tmax = descents[best].t;
  r.center = Center{strata[win].v};
  r.stratum = strata[win];
  r.attaining_minimal = (int)minimal.size();
  return r;
}

}  // namespace binres
