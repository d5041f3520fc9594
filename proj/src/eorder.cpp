#include "binres/eorder.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

bool StratumFamily::contains(const Stratum& s) const {
  for (const auto& m : minimal)
    if (m.subset_of(s)) return true;
  return false;
}

Rational eord_generator(const Generator& g, const Stratum& s) {
  switch (g.kind) {
    case GenKind::Monomial:
      return g.nu.degree(s.v);
    case GenKind::Hyperbolic:
      // x^nu (1 - mu y^delta): the hyperbolic factor has order 0 along E
      return g.nu.degree(s.v);
    case GenKind::Binomial:
      return g.nu.degree(s.v) + std::min(g.alpha.degree(s.v), g.beta.degree(s.v));
  }
  return 0;
}

Rational eord_ideal(const Ideal& J, const Stratum& s) {
  if (J.gens.empty()) fail(ErrorKind::Input, "E-order of the zero ideal is undefined");
  Rational m = eord_generator(J.gens[0], s);
  for (std::size_t k = 1; k < J.gens.size(); ++k)
    m = std::min(m, eord_generator(J.gens[k], s));
  return J.mpart.degree(s.v) + m;
}

std::vector<Stratum> esing_all(const Ideal& J, const std::vector<int>& active, const Rational& c) {
  std::vector<Stratum> out;
  const std::size_t k = active.size();
  if (k > 24) fail(ErrorKind::Unsupported, "too many active variables for stratum enumeration");
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> vs;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) vs.push_back(active[i]);
    Stratum s(vs);
    if (eord_ideal(J, s) >= c) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
    return a.v < b.v;
  });
  return out;
}

StratumFamily esing(const Ideal& J, const std::vector<int>& active, const Rational& c) {
  StratumFamily fam;
  for (const auto& s : esing_all(J, active, c)) {
    if (!fam.contains(s)) fam.minimal.push_back(s);
  }
  return fam;
}

EtopResult etop(const Ideal& J, const std::vector<int>& active) {
  // E-order is monotone under stratum inclusion, so the maximum sits at the
  // full active stratum
  EtopResult r;
  r.theta = eord_ideal(J, Stratum(active));
  r.strata = esing(J, active, r.theta);
  return r;
}

}  // namespace binres
