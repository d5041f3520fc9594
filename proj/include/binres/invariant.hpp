#pragma once

#include <optional>

#include "binres/eorder.hpp"

namespace binres {

/// Monomial-case resolution value (-p, w, rho): p = fewest divisors whose
/// exponents reach the control, w = best weight among those, rho = ages of
/// the chosen divisors, newest first.
struct GammaTriple {
  Rational negp;
  Rational w;
  std::vector<int> rho;  // divisor ages, strictly decreasing

  static GammaTriple bottom();
  bool is_bottom() const;

  std::string str() const;
};

int compare(const GammaTriple& a, const GammaTriple& b);

/// One component of the resolution function: Inf, or Fin{q} with q > 0, or
/// the monomial case Fin{0, gamma}.
struct InvariantComponent {
  bool inf = false;
  Rational q;
  std::optional<GammaTriple> gamma;

  static InvariantComponent infinity() { return {true, 0, std::nullopt}; }
  static InvariantComponent finite(Rational v) { return {false, std::move(v), std::nullopt}; }
  static InvariantComponent monomial(GammaTriple g) { return {false, 0, std::move(g)}; }

  std::string str() const;
};

int compare(const InvariantComponent& a, const InvariantComponent& b);

/// The n-component lexicographic value t; once a component is Inf or carries
/// a Gamma, every later component is Inf.
struct InvariantValue {
  std::vector<InvariantComponent> comps;

  std::string str() const;
};

/// Lexicographic, total; lengths must agree.
int compare(const InvariantValue& a, const InvariantValue& b);

struct Center {
  std::vector<int> vars;  // nonempty set of vanishable variable indices
};

/// P = I when theta >= c, I + M^{theta/(c-theta)} when 0 < theta < c
/// (vacuous when M = 1). theta = 0 is the caller's monomial branch.
Ideal companion(const Ideal& I, const Exponents& M, const Rational& theta, const Rational& c);

/// Smallest variable index contained in every stratum of ESing(P, theta),
/// theta = max E-ord(P): the coordinate hypersurface of E-maximal contact.
int select_max_contact(const Ideal& P, const Rational& c, const std::vector<int>& active);

/// Local variant at a stratum: smallest index common to every substratum of s
/// where the E-order of P stays at eord(P, s).
int select_max_contact_local(const Ideal& P, const Stratum& s);

/// Junior ideal of P in V(x_j): per term with x_j-exponent k < c, the
/// x_j-free monomial weighted by c/(c-k); unit ideal when nothing survives.
/// Pure hyperbolic generators contribute nothing.
Ideal ecoeff(const Ideal& P, const Rational& c, int j, const std::vector<char>& y_mask);

/// Gamma value of the divisor monomial M (restricted to the stratum by the
/// caller) with respect to control c; nullopt when no divisor subset reaches
/// c. Also returns the chosen divisor variables (the center).
std::optional<std::pair<GammaTriple, std::vector<int>>> gamma_value(
    const Exponents& M, const Rational& c, const std::vector<VariableInfo>& vars);

/// Record of one level of the mobile descent (kept for invariant checks).
struct DescentLevel {
  Ideal I_part;
  Exponents M_part;
  Rational theta;
  int contact = -1;
  std::vector<int> remaining;  // active variables not yet consumed by contacts
};

struct Descent {
  InvariantValue t;
  std::vector<int> center;  // contact and Gamma variables, in descent order
  std::vector<DescentLevel> levels;
};

/// Full mobile descent of the resolution function at one stratum.
Descent descend(const Chart& chart, const Stratum& s, const Rational& c);

/// The spec-facing operation: the invariant value alone.
InvariantValue resolution_function(const Chart& chart, const Stratum& s, const Rational& c);

struct EmaxbResult {
  InvariantValue tmax;
  Center center;
  Stratum stratum;          // chosen minimal stratum attaining tmax
  int attaining_minimal = 1;  // number of minimal strata attaining tmax
};

/// Maximal invariant over the E-singular locus and the next center to blow
/// up: the smallest minimal stratum attaining tmax (a component of
/// EMaxB(t)). Asserts the Etop chain of the winning descent. When several
/// incomparable components attain the maximum they are blown one at a time;
/// attaining_minimal reports their number so drivers can verify descent.
EmaxbResult emaxb(const Chart& chart, const Rational& c);

}  // namespace binres
