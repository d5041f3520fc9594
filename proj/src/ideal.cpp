#include "binres/ideal.hpp"

namespace binres {

Ideal Ideal::unit(std::size_t nvars, long long p) {
  Ideal one;
  one.mpart = Exponents(nvars);
  Generator g;
  g.kind = GenKind::Monomial;
  g.nu = g.alpha = g.beta = g.gamma = Exponents(nvars);
  g.coef = FieldElement::one(p);
  one.gens.push_back(g);
  return one;
}

bool Ideal::has_unit_gen() const {
  for (const auto& g : gens)
    if (g.is_unit()) return true;
  return false;
}

std::vector<char> Ideal::support_mask() const {
  std::vector<char> m(nvars(), 0);
  auto mark = [&](const Exponents& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) m[i] = 1;
  };
  mark(mpart);
  for (const auto& g : gens)
    for (const auto& t : g.terms()) mark(t.expo);
  return m;
}

Ideal refactorize(const Ideal& J, const std::vector<char>& exceptional) {
  if (J.gens.empty()) return J;
  Exponents common = J.gens[0].nu.restricted(exceptional);
  for (std::size_t k = 1; k < J.gens.size(); ++k)
    common = Exponents::min(common, J.gens[k].nu.restricted(exceptional));
  Ideal out = J;
  if (common.is_zero()) return out;
  out.mpart = out.mpart + common;
  for (auto& g : out.gens) g.nu = g.nu - common;
  return out;
}

}  // namespace binres
