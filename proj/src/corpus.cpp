#include "binres/corpus.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

namespace {

/// splitmix64: tiny, stable across platforms and standard libraries.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long long below(long long n) { return (long long)(next() % (std::uint64_t)n); }
};

FieldElement random_nonzero(Rng& rng, long long p) {
  if (p > 0) return FieldElement::from_int(p, 1 + rng.below(p - 1));
  static const int nums[] = {1, 2, 3, 5, -1, -2, -3};
  static const int dens[] = {1, 1, 1, 2, 3};
  return FieldElement::from_rational(
      0, Rational(nums[rng.below(7)], dens[rng.below(5)]));
}

Exponents random_monomial(Rng& rng, std::size_t n, int max_exp, int max_support) {
  Exponents e(n);
  int support = 1 + (int)rng.below(max_support);
  for (int k = 0; k < support; ++k)
    e[(std::size_t)rng.below((long long)n)] += 1 + rng.below(max_exp);
  for (std::size_t i = 0; i < n; ++i)
    if (e[i] > max_exp) e[i] = max_exp;
  return e;
}

}  // namespace

Chart corpus_ideal(std::uint64_t seed, std::uint64_t index, const CorpusOptions& opt) {
  Rng rng{seed * 0x2545f4914f6cdd1dull + index + 1};
  const std::size_t n =
      (std::size_t)(opt.min_vars + rng.below(opt.max_vars - opt.min_vars + 1));
  const long long p =
      opt.characteristics[(std::size_t)rng.below((long long)opt.characteristics.size())];

  Chart chart;
  chart.p = p;
  for (std::size_t i = 0; i < n; ++i) chart.vars.push_back({"x" + std::to_string(i + 1), false, -1});
  std::vector<char> is_y = chart.y_mask();
  chart.ideal.mpart = Exponents(n);

  const int ngens = 1 + (int)rng.below(opt.max_gens);
  for (int g = 0; g < ngens; ++g) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      long long shape = rng.below(10);
      std::vector<RawTerm> terms;
      if (shape == 0) {
        // pure monomial
        terms.push_back({random_nonzero(rng, p), random_monomial(rng, n, opt.max_exp, 2)});
      } else if (shape == 1) {
        // constant against a monomial: forces hyperbolic relabeling
        Exponents zero(n);
        terms.push_back({random_nonzero(rng, p), zero});
        terms.push_back({random_nonzero(rng, p), random_monomial(rng, n, opt.max_exp, 2)});
      } else {
        Exponents a = random_monomial(rng, n, opt.max_exp, 2);
        Exponents b = random_monomial(rng, n, opt.max_exp, 2);
        if (a == b) continue;
        terms.push_back({random_nonzero(rng, p), a});
        terms.push_back({random_nonzero(rng, p), b});
      }
      Generator gen = normalize_generator(terms, is_y);
      if (gen.is_unit()) continue;
      chart.ideal.gens.push_back(gen);
      break;
    }
  }
  if (chart.ideal.gens.empty()) {
    Generator gen;
    gen.kind = GenKind::Monomial;
    gen.nu = gen.alpha = gen.beta = gen.gamma = Exponents(n);
    gen.nu[0] = 2;
    gen.coef = FieldElement::one(p);
    chart.ideal.gens.push_back(gen);
  }
  for (std::size_t k = 0; k < chart.ideal.gens.size(); ++k) chart.gen_origin.push_back((int)k);
  chart.total_gens = chart.ideal.gens;
  return detect_hyperbolic_and_relabel(std::move(chart));
}

SimpidealInstance corpus_simpideal(std::uint64_t seed, std::uint64_t index) {
  Rng rng{seed * 0x9e3779b97f4a7c15ull + index + 17};
  const std::size_t nx = 1 + (std::size_t)rng.below(2);
  const std::size_t ny = 1 + (std::size_t)rng.below(3);
  const std::size_t n = nx + ny;
  static const long long chars[] = {0, 2, 3, 5};
  const long long p = chars[rng.below(4)];

  SimpidealInstance inst;
  Chart& chart = inst.chart;
  chart.p = p;
  for (std::size_t i = 0; i < nx; ++i)
    chart.vars.push_back({"x" + std::to_string(i + 1), false, (int)i});
  for (std::size_t i = 0; i < ny; ++i)
    chart.vars.push_back({"y" + std::to_string(i + 1), true, -1});
  chart.ideal.mpart = Exponents(n);

  inst.r = 1 + (int)rng.below(4);
  for (int g = 0; g < inst.r; ++g) {
    Generator gen;
    gen.kind = GenKind::Hyperbolic;
    gen.nu = gen.alpha = gen.beta = gen.gamma = Exponents(n);
    if (rng.below(2)) {
      for (std::size_t i = 0; i < nx; ++i)
        if (rng.below(2)) gen.nu[i] = 1 + rng.below(3);
    }
    bool nonzero = false;
    for (std::size_t i = nx; i < n; ++i) {
      long long e = rng.below(7) - 3;  // -3..3
      if (p > 0 && rng.below(3) == 0) e *= p;  // sprinkle p-divisible exponents
      gen.gamma[i] = e;
      nonzero = nonzero || e != 0;
    }
    if (!nonzero) gen.gamma[nx] = 1 + rng.below(3);
    gen.coef = random_nonzero(rng, p);
    chart.ideal.gens.push_back(gen);
  }
  if (rng.below(2)) {
    Generator eps;
    eps.kind = GenKind::Monomial;
    eps.nu = eps.alpha = eps.beta = eps.gamma = Exponents(n);
    for (std::size_t i = 0; i < nx; ++i) eps.nu[i] = rng.below(4);
    if (eps.nu.is_zero()) eps.nu[0] = 1;
    eps.coef = FieldElement::one(p);
    chart.ideal.gens.push_back(eps);
  }
  for (std::size_t k = 0; k < chart.ideal.gens.size(); ++k) chart.gen_origin.push_back((int)k);
  chart.total_gens = chart.ideal.gens;

  std::vector<int> svars;
  for (std::size_t i = 0; i < nx; ++i)
    if (rng.below(2)) svars.push_back((int)i);
  inst.stratum = Stratum(svars);
  return inst;
}

Chart permute_chart(const Chart& chart, const std::vector<int>& perm) {
  // perm maps old index -> new index and must preserve classes
  Chart out = chart;
  for (std::size_t i = 0; i < chart.vars.size(); ++i) {
    out.vars[(std::size_t)perm[i]] = chart.vars[i];
    out.vars[(std::size_t)perm[i]].name = chart.vars[i].name;
  }
  auto map_expo = [&](const Exponents& e) {
    Exponents r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) r[(std::size_t)perm[i]] = e[i];
    return r;
  };
  auto map_gen = [&](const Generator& g) {
    Generator r = g;
    r.nu = map_expo(g.nu);
    r.alpha = map_expo(g.alpha);
    r.beta = map_expo(g.beta);
    r.gamma = map_expo(g.gamma);
    return renormalize(r, out.y_mask());
  };
  out.ideal.mpart = map_expo(chart.ideal.mpart);
  for (std::size_t k = 0; k < chart.ideal.gens.size(); ++k)
    out.ideal.gens[k] = map_gen(chart.ideal.gens[k]);
  for (std::size_t k = 0; k < chart.total_gens.size(); ++k)
    out.total_gens[k] = map_gen(chart.total_gens[k]);
  return out;
}

std::vector<int> corpus_permutation(const Chart& chart, std::uint64_t seed, std::uint64_t index) {
  Rng rng{seed ^ (0xd1342543de82ef95ull * (index + 3))};
  std::vector<int> xs, ys;
  for (std::size_t i = 0; i < chart.vars.size(); ++i)
    (chart.vars[i].is_y ? ys : xs).push_back((int)i);
  auto shuffle = [&](std::vector<int>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[(std::size_t)rng.below((long long)i)]);
  };
  std::vector<int> fromrx = xs, fromry = ys;
  shuffle(fromrx);
  shuffle(fromry);
  std::vector<int> perm(chart.vars.size());
  for (std::size_t k = 0; k < xs.size(); ++k) perm[(std::size_t)xs[k]] = fromrx[k];
  for (std::size_t k = 0; k < ys.size(); ++k) perm[(std::size_t)ys[k]] = fromry[k];
  return perm;
}

}  // namespace binres
