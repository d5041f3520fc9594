#pragma once

#include <optional>
#include <variant>

#include "binres/chart.hpp"

namespace binres {

/// One hyperbolic factor 1 - mu * y^delta (delta integral, any sign).
struct HypFactor {
  FieldElement mu;
  Exponents delta;
};

struct LatticeReduction {
  bool unit = false;             // a nonzero constant was generated
  std::vector<HypFactor> pivots; // echelon basis of the factor lattice
  std::vector<int> leads;        // leading coordinate of each pivot
};

/// Euclid-style echelon reduction of a list of hyperbolic factors. The
/// elementary step replaces 1-U by 1-U*V^{-k} against a pivot 1-V, which
/// preserves the generated ideal of the pure factors.
LatticeReduction reduce_lattice(std::vector<HypFactor> rows);

/// Reduces one factor against the pivot basis. Returns the residual factor
/// (delta = 0 when the exponent lies in the pivot lattice) and the integer
/// coefficient used against each pivot.
struct FactorTrail {
  HypFactor residual;
  std::vector<Int> coeffs;
};
FactorTrail reduce_factor(const HypFactor& f, const LatticeReduction& basis);

/// Single-variable hyperbolic gcd: <1 - mu_i y^{a_i}> collapses to one
/// generator with a = gcd(a_i), or to the unit ideal when the coefficients
/// disagree.
struct Gcd1Result {
  bool unit = false;
  FieldElement mu;
  long long alpha = 0;
};
Gcd1Result hyperbolic_gcd_1var(const std::vector<std::pair<FieldElement, long long>>& gens);

/// alpha = p^s * alpha' with alpha' not identically divisible by p, and
/// mu = mu'^{p^s}. Characteristic zero is the identity split. Throws
/// Unsupported when the required root does not exist in the field.
struct PSplit {
  long long s = 0;
  Exponents alpha;
  FieldElement mu;
};
PSplit p_power_split(const Exponents& alpha, const FieldElement& mu, long long p);

/// A local coordinate of the monomial form: either an original chart
/// variable or a hyperbolic coordinate 1 - eta y^a carrying a p-power.
struct ZVar {
  bool from_var = false;
  int var = -1;        // chart variable index when from_var
  FieldElement eta;    // hyperbolic coordinate data otherwise
  Exponents a;
  long long s = 0;     // the generator of the ideal is z^{p^s}
  std::string name;
};

struct LocalMonomialForm {
  bool unit = false;               // J = 1 at the chosen point
  std::vector<ZVar> zvars;
  std::vector<Exponents> lambdas;  // exponents over zvars, minimal generators
};

/// Prop-2.12 monomial form of a simpideal-shaped ideal at the point of the
/// stratum (deepest consistent hyperbolic profile): J = <z^{lambda_1}, ...,
/// z^{lambda_t}> with t <= min(r+1, n).
LocalMonomialForm local_monomial_form(const Ideal& J, const Chart& chart, const Stratum& s);

/// Def-2.10 grammar: every total-transform generator is an exceptional
/// monomial times a hyperbolic equation (invertible support only), or a
/// pure exceptional monomial. Generators dominated by a monomial generator
/// are redundant and ignored.
bool is_locally_monomial(const Chart& chart);
bool is_locally_monomial_gens(const std::vector<Generator>& gens,
                              const std::vector<char>& exceptional,
                              const std::vector<char>& y_mask);

/// Log-resolved: the total transform is one exceptional monomial.
bool is_log_resolved(const Chart& chart);

enum class ERegVerdict { RegularNC, Singular, Tangent, EmptyLocus };
std::string verdict_str(ERegVerdict v);

/// Combinatorial regular-normal-crossings check of the subvariety cut out by
/// X_gens at the stratum: the Lemma-3.1 support rule first, then the exponent
/// Jacobian over the invertible coordinates with p-power degeneration
/// detected through p_power_split.
ERegVerdict ereg_nc_check(const std::vector<Generator>& X_gens, const Chart& chart,
                          const Stratum& s);

/// Fresh chart for the second resolution phase: one coordinate per distinct
/// hyperbolic factor of the total transform (exact per-generator
/// factorization M*(1-mu y^delta) = M * z^{p^s} * unit), all divisor ages
/// reset, ideal = imaged total transform.
Chart build_monomialization_chart(const Chart& leaf);

}  // namespace binres
