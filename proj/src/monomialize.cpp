#include "binres/monomialize.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

void flip_sign(HypFactor& f) {
  f.delta = Exponents(f.delta.size()) - f.delta;
  f.mu = f.mu.inverse();
}

}  // namespace

LatticeReduction reduce_lattice(std::vector<HypFactor> rows) {
  LatticeReduction out;
  if (rows.empty()) return out;
  const std::size_t n = rows[0].delta.size();
  std::vector<char> done(rows.size(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    // indices of live rows with a nonzero entry at column j
    auto live_at = [&](std::size_t col) {
      std::vector<std::size_t> idx;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (!done[r] && rows[r].delta[col] != 0) idx.push_back(r);
      return idx;
    };
    std::vector<std::size_t> idx = live_at(j);
    if (idx.empty()) continue;
    for (;;) {
      idx = live_at(j);
      if (idx.size() <= 1) break;
      std::size_t a = idx[0];
      for (std::size_t r : idx)
        if (abs_int(rat_num(rows[r].delta[j])) < abs_int(rat_num(rows[a].delta[j]))) a = r;
      for (std::size_t r : idx) {
        if (r == a) continue;
        Int k = rat_num(rows[r].delta[j]) / rat_num(rows[a].delta[j]);
        long long kk = to_ll(k);
        rows[r].delta = rows[r].delta - rows[a].delta * Rational(k);
        rows[r].mu = rows[r].mu * rows[a].mu.pow(-kk);
      }
    }
    if (!idx.empty()) {
      std::size_t a = idx[0];
      if (rows[a].delta[j] < 0) flip_sign(rows[a]);
      out.pivots.push_back(rows[a]);
      out.leads.push_back((int)j);
      done[a] = 1;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (done[r]) continue;
    if (!rows[r].delta.is_zero()) fail(ErrorKind::Invariant, "lattice reduction left a live row");
    if (!rows[r].mu.is_one()) out.unit = true;
  }
  return out;
}

FactorTrail reduce_factor(const HypFactor& f, const LatticeReduction& basis) {
  FactorTrail t;
  t.residual = f;
  t.coeffs.assign(basis.pivots.size(), Int(0));
  for (std::size_t k = 0; k < basis.pivots.size(); ++k) {
    int j = basis.leads[k];
    Int d = rat_num(t.residual.delta[(std::size_t)j]);
    if (d == 0) continue;
    Int lead = rat_num(basis.pivots[k].delta[(std::size_t)j]);
    if (d % lead != 0) return t;  // not in the lattice; leave the residual
    Int q = d / lead;
    t.coeffs[k] = q;
    long long qq = to_ll(q);
    t.residual.delta = t.residual.delta - basis.pivots[k].delta * Rational(q);
    t.residual.mu = t.residual.mu * basis.pivots[k].mu.pow(-qq);
  }
  return t;
}

Gcd1Result hyperbolic_gcd_1var(const std::vector<std::pair<FieldElement, long long>>& gens) {
  if (gens.empty()) fail(ErrorKind::Input, "empty hyperbolic system");
  std::vector<HypFactor> rows;
  for (const auto& [mu, a] : gens) {
    if (a <= 0) fail(ErrorKind::Input, "exponents must be positive");
    if (mu.is_zero()) fail(ErrorKind::Input, "hyperbolic coefficient must be nonzero");
    Exponents d(1);
    d[0] = a;
    rows.push_back({mu, d});
  }
  LatticeReduction red = reduce_lattice(std::move(rows));
  Gcd1Result r;
  if (red.unit) {
    r.unit = true;
    return r;
  }
  if (red.pivots.size() != 1) fail(ErrorKind::Invariant, "1-variable lattice must have one pivot");
  r.mu = red.pivots[0].mu;
  r.alpha = rat_to_ll(red.pivots[0].delta[0]);
  return r;
}

PSplit p_power_split(const Exponents& alpha, const FieldElement& mu, long long p) {
  if (alpha.is_zero()) fail(ErrorKind::Input, "p_power_split needs a nonzero exponent");
  PSplit out{0, alpha, mu};
  if (p == 0) return out;
  for (;;) {
    bool divisible = true;
    for (std::size_t i = 0; i < out.alpha.size(); ++i) {
      if (out.alpha[i] == 0) continue;
      if (!is_integral(out.alpha[i]) || rat_num(out.alpha[i]) % p != 0) {
        divisible = false;
        break;
      }
    }
    if (!divisible) return out;
    auto root = out.mu.root(p);
    if (!root)
      fail(ErrorKind::Unsupported,
           "no " + std::to_string(p) + "-th root of " + out.mu.str() + " in the field");
    out.mu = *root;
    out.alpha = out.alpha * Rational(1, p);
    ++out.s;
  }
}

namespace {

/// Multiplicity of the pivot coordinate in 1 - U^k: p^{v_p(k)} in
/// characteristic p, 1 otherwise.
long long trail_multiplicity(const Int& k, long long p) {
  if (k == 0) return 0;
  if (p == 0) return 1;
  Int a = abs_int(k);
  long long m = 1;
  while (a % p == 0) {
    a /= p;
    m *= p;
  }
  return m;
}

void minimalize(std::vector<Exponents>& monos) {
  std::vector<Exponents> keep;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < monos.size() && !dominated; ++j) {
      if (i == j) continue;
      // monos[j] divides monos[i]; ties keep the earlier entry
      bool div = true;
      for (std::size_t v = 0; v < monos[i].size(); ++v)
        if (monos[j][v] > monos[i][v]) { div = false; break; }
      if (div && (!(monos[j] == monos[i]) || j < i)) dominated = true;
    }
    if (!dominated) keep.push_back(monos[i]);
  }
  monos = std::move(keep);
}

std::string fresh_name(const std::vector<std::string>& taken, int k) {
  std::string base = "z" + std::to_string(k);
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base = "z" + base;
  return base;
}

}  // namespace

LocalMonomialForm local_monomial_form(const Ideal& J, const Chart& chart, const Stratum& s) {
  const std::size_t n = chart.dim();
  const long long p = chart.p;
  LocalMonomialForm form;

  std::vector<char> on_stratum(n, 0);
  for (int v : s.v) on_stratum[(std::size_t)v] = 1;

  // coordinate part: the stratum variables stay coordinates
  std::vector<int> zindex_of_var(n, -1);
  std::vector<std::string> names = chart.names();
  for (int v : s.v) {
    ZVar zv;
    zv.from_var = true;
    zv.var = v;
    zv.name = names[(std::size_t)v];
    zindex_of_var[(std::size_t)v] = (int)form.zvars.size();
    form.zvars.push_back(zv);
  }

  struct GenPart {
    Exponents m;  // monomial part restricted to the stratum
    std::optional<HypFactor> factor;
  };
  std::vector<GenPart> parts;
  for (const auto& g : J.gens) {
    if (g.kind == GenKind::Binomial)
      fail(ErrorKind::Input, "local monomial form expects simpideal shape");
    GenPart gp;
    gp.m = (g.nu + J.mpart).restricted(on_stratum);
    if (g.kind == GenKind::Hyperbolic) gp.factor = HypFactor{g.coef, g.gamma};
    parts.push_back(std::move(gp));
  }

  // deepest consistent profile: accept factors in generator order, skipping
  // any whose addition would force a unit; skipped factors cannot vanish at
  // the chosen point and melt into coefficients
  std::vector<HypFactor> accepted;
  LatticeReduction basis;
  std::vector<char> factor_unit(parts.size(), 0);
  for (std::size_t gi = 0; gi < parts.size(); ++gi) {
    if (!parts[gi].factor) continue;
    std::vector<HypFactor> rows = accepted;
    rows.push_back(*parts[gi].factor);
    LatticeReduction attempt = reduce_lattice(rows);
    if (attempt.unit) {
      factor_unit[gi] = 1;
    } else {
      accepted = std::move(rows);
      basis = std::move(attempt);
    }
  }

  // one z-coordinate per pivot, built from the p-split root
  std::vector<long long> pivot_pmult(basis.pivots.size(), 1);
  for (std::size_t k = 0; k < basis.pivots.size(); ++k) {
    PSplit split = p_power_split(basis.pivots[k].delta, basis.pivots[k].mu, p);
    ZVar zv;
    zv.eta = split.mu;
    zv.a = split.alpha;
    zv.s = split.s;
    zv.name = fresh_name(names, (int)k + 1);
    names.push_back(zv.name);
    for (long long i = 0; i < split.s; ++i) pivot_pmult[k] *= p;
    form.zvars.push_back(zv);
  }

  const std::size_t width = form.zvars.size();
  const std::size_t nz = s.v.size();  // z-coordinates start after the stratum variables
  std::vector<Exponents> lambdas;
  for (std::size_t gi = 0; gi < parts.size(); ++gi) {
    Exponents l(width);
    for (int v : parts[gi].m.support())
      l[(std::size_t)zindex_of_var[(std::size_t)v]] = parts[gi].m[(std::size_t)v];
    if (parts[gi].factor && !factor_unit[gi]) {
      FactorTrail trail = reduce_factor(*parts[gi].factor, basis);
      if (!trail.residual.delta.is_zero())
        fail(ErrorKind::Invariant, "accepted factor escaped its lattice");
      if (!trail.residual.mu.is_one()) {
        factor_unit[gi] = 1;  // inconsistent leftover: unit at the point
      } else {
        for (std::size_t k = 0; k < trail.coeffs.size(); ++k)
          if (trail.coeffs[k] != 0)
            l[nz + k] += Rational(pivot_pmult[k] * trail_multiplicity(trail.coeffs[k], p));
      }
    }
    if (l.is_zero()) {
      form.unit = true;  // a generator is a unit at the point
      return form;
    }
    lambdas.push_back(std::move(l));
  }
  minimalize(lambdas);
  form.lambdas = std::move(lambdas);
  return form;
}

namespace {

/// g is redundant when some other monomial generator divides its monomial
/// factor (the represented ideal is unchanged by dropping it).
std::vector<char> redundant_mask(const std::vector<Generator>& gens) {
  std::vector<char> redundant(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j || gens[j].kind != GenKind::Monomial) continue;
      bool divides = true;
      for (std::size_t v = 0; v < gens[i].nu.size(); ++v)
        if (gens[j].nu[v] > gens[i].nu[v]) { divides = false; break; }
      if (divides && (gens[i].kind != GenKind::Monomial || !(gens[i].nu == gens[j].nu) || j < i)) {
        redundant[i] = 1;
        break;
      }
    }
  }
  return redundant;
}

}  // namespace

bool is_locally_monomial_gens(const std::vector<Generator>& gens,
                              const std::vector<char>& exceptional,
                              const std::vector<char>& y_mask) {
  std::vector<char> redundant = redundant_mask(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (redundant[i]) continue;
    const Generator& g = gens[i];
    if (g.kind == GenKind::Binomial) return false;
    if (g.kind == GenKind::Hyperbolic && !g.gamma.supported_on(y_mask)) return false;
    if (!g.nu.supported_on(exceptional)) return false;
  }
  return true;
}

bool is_locally_monomial(const Chart& chart) {
  return is_locally_monomial_gens(chart.total_gens, chart.exc_mask(), chart.y_mask());
}

bool is_log_resolved(const Chart& chart) {
  std::vector<char> exc = chart.exc_mask();
  std::vector<char> redundant = redundant_mask(chart.total_gens);
  std::vector<const Generator*> live;
  for (std::size_t i = 0; i < chart.total_gens.size(); ++i)
    if (!redundant[i]) live.push_back(&chart.total_gens[i]);
  for (const Generator* g : live) {
    if (g->kind != GenKind::Monomial) return false;
    if (!g->nu.supported_on(exc)) return false;
  }
  // principal: one generator divides every other
  for (const Generator* g : live) {
    bool divides_all = true;
    for (const Generator* h : live) {
      for (std::size_t v = 0; v < g->nu.size(); ++v)
        if (g->nu[v] > h->nu[v]) { divides_all = false; break; }
      if (!divides_all) break;
    }
    if (divides_all) return true;
  }
  return live.empty();
}

std::string verdict_str(ERegVerdict v) {
  switch (v) {
    case ERegVerdict::RegularNC: return "regular-nc";
    case ERegVerdict::Singular: return "singular";
    case ERegVerdict::Tangent: return "tangent";
    case ERegVerdict::EmptyLocus: return "empty";
  }
  return "?";
}

ERegVerdict ereg_nc_check(const std::vector<Generator>& X_gens, const Chart& chart,
                          const Stratum& s) {
  const std::size_t n = chart.dim();
  const long long p = chart.p;
  std::vector<char> in_s(n, 0);
  for (int v : s.v) in_s[(std::size_t)v] = 1;
  auto meets = [&](const Exponents& e) {
    for (int v : e.support())
      if (in_s[(std::size_t)v]) return true;
    return false;
  };

  // Lemma 3.1 support rule
  bool tangent = false;
  for (const auto& g : X_gens) {
    if (g.kind != GenKind::Binomial) continue;
    bool am = meets(g.alpha), bm = meets(g.beta);
    if (am && bm) return ERegVerdict::Singular;
    if (am || bm) tangent = true;
    if (meets(g.nu)) return ERegVerdict::Singular;
  }
  if (tangent) return ERegVerdict::Tangent;

  // combinatorial Jacobian at the stratum: coordinate rows from plain
  // coordinate generators, torus rows from everything else
  std::vector<HypFactor> torus_rows;
  std::vector<char> coord(n, 0);
  for (const auto& g : X_gens) {
    switch (g.kind) {
      case GenKind::Monomial: {
        if (g.is_unit()) return ERegVerdict::EmptyLocus;
        std::vector<int> supp = g.nu.support();
        if (!meets(g.nu)) return ERegVerdict::EmptyLocus;  // unit on the stratum
        if (supp.size() == 1 && in_s[(std::size_t)supp[0]]) {
          coord[(std::size_t)supp[0]] = 1;  // coordinate equation x_v^k
        } else {
          return ERegVerdict::Singular;  // a vanishing multi-variable monomial
        }
        break;
      }
      case GenKind::Hyperbolic: {
        if (meets(g.nu)) return ERegVerdict::Singular;
        // the monomial factor is a unit off the stratum; if the residual
        // factor 1 - mu x^d y^e loses a vanishing x, it degenerates to 1
        bool unit_factor = false;
        for (int v : g.gamma.support())
          if (in_s[(std::size_t)v]) unit_factor = true;
        if (unit_factor) return ERegVerdict::EmptyLocus;
        torus_rows.push_back({g.coef, g.gamma});
        break;
      }
      case GenKind::Binomial: {
        // supports avoid the stratum; off it the generator is hyperbolic
        torus_rows.push_back({g.coef, g.beta - g.alpha - g.gamma});
        break;
      }
    }
  }
  if (torus_rows.empty()) return ERegVerdict::RegularNC;

  LatticeReduction red = reduce_lattice(torus_rows);
  if (red.unit) return ERegVerdict::EmptyLocus;

  // rank of the split exponent matrix over the residue field
  std::vector<Exponents> rowsplit;
  for (const auto& piv : red.pivots) {
    if (piv.delta.is_zero()) continue;
    rowsplit.push_back(p_power_split(piv.delta, piv.mu, p).alpha);
  }
  if (p == 0) return ERegVerdict::RegularNC;  // echelon rows are Q-independent
  std::vector<std::vector<long long>> m;
  for (const auto& r : rowsplit) {
    std::vector<long long> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      Int v = rat_num(r[i]) % p;
      row[i] = to_ll(v < 0 ? v + p : v);
    }
    m.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      // eliminate using modular inverse-free row combination
      long long f = m[r][col], g = m[rank][col];
      for (std::size_t c2 = 0; c2 < n; ++c2)
        m[r][c2] = ((m[r][c2] * g - m[rank][c2] * f) % p + p) % p;
    }
    ++rank;
  }
  return rank == rowsplit.size() ? ERegVerdict::RegularNC : ERegVerdict::Singular;
}

Chart build_monomialization_chart(const Chart& leaf) {
  Chart z;
  z.p = leaf.p;
  z.lineage = Lineage{LineageKind::Monomialization, leaf.id, {}, -1};

  for (const auto& v : leaf.vars) {
    VariableInfo nv = v;
    if (nv.age >= 0) nv.was_exceptional = true;
    nv.age = -1;  // the second phase starts with H empty
    z.vars.push_back(nv);
  }

  std::vector<std::string> names = leaf.names();
  struct Key {
    std::string mu;
    std::vector<Rational> d;
    bool operator==(const Key& o) const { return mu == o.mu && d == o.d; }
  };
  std::vector<Key> seen;
  std::vector<PSplit> splits;
  std::vector<int> zvar_of_gen(leaf.total_gens.size(), -1);

  for (std::size_t gi = 0; gi < leaf.total_gens.size(); ++gi) {
    const Generator& g = leaf.total_gens[gi];
    if (g.kind == GenKind::Binomial ||
        (g.kind == GenKind::Hyperbolic && !g.gamma.supported_on(leaf.y_mask())))
      fail(ErrorKind::Input, "monomialization needs a locally monomial total transform");
    if (g.kind != GenKind::Hyperbolic) continue;
    Key k{g.coef.str(), g.gamma.e};
    std::size_t idx = 0;
    for (; idx < seen.size(); ++idx)
      if (seen[idx] == k) break;
    if (idx == seen.size()) {
      seen.push_back(k);
      splits.push_back(p_power_split(g.gamma, g.coef, leaf.p));
      VariableInfo zv;
      zv.name = fresh_name(names, (int)idx + 1);
      zv.z_coordinate = true;
      names.push_back(zv.name);
      z.vars.push_back(zv);
    }
    zvar_of_gen[gi] = (int)(leaf.vars.size() + idx);
  }

  const std::size_t n2 = z.vars.size();
  auto widen = [&](const Exponents& e) {
    Exponents r(n2);
    for (std::size_t i = 0; i < e.size(); ++i) r[i] = e[i];
    return r;
  };

  z.ideal.mpart = Exponents(n2);
  for (std::size_t gi = 0; gi < leaf.total_gens.size(); ++gi) {
    const Generator& g = leaf.total_gens[gi];
    Generator ng;
    ng.kind = GenKind::Monomial;
    ng.nu = widen(g.nu);
    ng.alpha = ng.beta = ng.gamma = Exponents(n2);
    ng.coef = FieldElement::one(leaf.p);
    if (zvar_of_gen[gi] >= 0) {
      const PSplit& sp = splits[(std::size_t)(zvar_of_gen[gi] - (int)leaf.vars.size())];
      Rational mult = 1;
      for (long long i = 0; i < sp.s; ++i) mult *= leaf.p;
      ng.nu[(std::size_t)zvar_of_gen[gi]] = mult;
    }
    z.ideal.gens.push_back(ng);
  }
  z.total_gens = z.ideal.gens;
  z.gen_origin.clear();
  for (std::size_t i = 0; i < z.ideal.gens.size(); ++i) z.gen_origin.push_back((int)i);
  return z;
}

}  // namespace binres
