#pragma once

#include "binres/chart.hpp"

namespace binres {

/// Upward-closed family of strata, represented by its minimal antichain.
struct StratumFamily {
  std::vector<Stratum> minimal;

  bool empty() const { return minimal.empty(); }
  bool contains(const Stratum& s) const;
};

/// E-order of a single generator along the stratum: the minimum Lambda-degree
/// of its terms. Hyperbolic factors contribute nothing beyond their monomial
/// part.
Rational eord_generator(const Generator& g, const Stratum& s);

/// E-order of J = M * <gens> along the stratum: the mpart degree plus the
/// minimum over the fixed generators. The zero ideal (no generators) has no
/// order.
Rational eord_ideal(const Ideal& J, const Stratum& s);

/// All strata over the active variables with eord >= c (the E-singular locus
/// restricted to its combinatorial support).
std::vector<Stratum> esing_all(const Ideal& J, const std::vector<int>& active, const Rational& c);

/// Minimal antichain of the E-singular locus.
StratumFamily esing(const Ideal& J, const std::vector<int>& active, const Rational& c);

struct EtopResult {
  Rational theta;
  StratumFamily strata;
};

/// Maximal E-order over all strata and the minimal strata attaining it.
EtopResult etop(const Ideal& J, const std::vector<int>& active);

}  // namespace binres
