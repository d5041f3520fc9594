#pragma once

#include "binres/invariant.hpp"

namespace binres {

/// Monomial substitution of the blow-up along V(x_i : i in center), chart of
/// x_i: the new exponent of x_i is the sum of the old exponents over the
/// center; all other exponents are unchanged.
struct BlowupSubstitution {
  std::vector<int> center;
  int chart_var;

  Exponents apply(const Exponents& e) const;
};

/// Total transform of a single generator divided by its own maximal
/// exceptional monomial factor. Hyperbolic factors are untouched.
Generator strict_transform_gen(const Generator& g, const BlowupSubstitution& sub,
                               const std::vector<char>& y_mask,
                               const std::vector<char>& exceptional);

/// Blows the chart up along the combinatorial center Z with control c:
/// one child per center variable, controlled transform
/// J' = I(Y')^{theta-c} * J-weak realized as mpart bookkeeping, exceptional
/// divisor ages from next_age (same age in every child), hyperbolic
/// relabeling applied to each child. theta is the E-order of J along Z.
std::vector<Chart> blowup(const Chart& chart, const Center& z, const Rational& c, int next_age,
                          int first_child_id);

}  // namespace binres
