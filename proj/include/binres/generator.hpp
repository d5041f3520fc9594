#pragma once

#include <string>
#include <vector>

#include "binres/exponents.hpp"
#include "binres/field.hpp"

namespace binres {

/// A single term c * prod var_i^{e_i}; exponents on invertible variables may
/// be negative.
struct RawTerm {
  FieldElement coef;
  Exponents expo;
};

enum class GenKind { Monomial, Hyperbolic, Binomial };

/// One normalized generator of a binomial ideal:
///   Monomial    x^nu                                (unit coefficient)
///   Hyperbolic  x^nu * (1 - coef * y^gamma)         (constant term exactly 1)
///   Binomial    x^nu * (y^gamma x^alpha - coef x^beta), supports of alpha and
///               beta disjoint, 0 < |alpha| <= |beta| over the vanishable part
///
/// A Hyperbolic generator whose gamma still touches vanishable variables is
/// transient: it appears after a blow-up substitution and is eliminated by
/// relabeling before the chart is stored.
struct Generator {
  GenKind kind = GenKind::Monomial;
  Exponents nu;     // common monomial factor on vanishable variables
  Exponents alpha;  // Binomial only
  Exponents beta;   // Binomial only
  Exponents gamma;  // Binomial: invertible part of the alpha-term; Hyperbolic: delta
  FieldElement coef;

  bool is_unit() const { return kind == GenKind::Monomial && nu.is_zero(); }

  /// Terms of the generator, expanded back to raw form.
  std::vector<RawTerm> terms() const;

  bool operator==(const Generator& o) const;
};

/// Normalizes one or two raw terms into Def-1.3 shape with respect to the
/// class mask (is_y[i] true when variable i is invertible). Rejects the zero
/// polynomial and negative or fractional exponents on vanishable variables.
Generator normalize_generator(std::vector<RawTerm> terms, const std::vector<char>& is_y);

/// Re-normalizes an existing generator (used after substitutions and after
/// class flips).
Generator renormalize(const Generator& g, const std::vector<char>& is_y);

/// x_j-degree of each term of g (one entry per term, matching terms()).
std::vector<Rational> term_degrees(const Generator& g, const std::vector<int>& vars);

std::string print_exponents(const Exponents& m, const std::vector<std::string>& names);
std::string print_generator(const Generator& g, const std::vector<std::string>& names);

}  // namespace binres
