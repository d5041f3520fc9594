#pragma once

#include <vector>

#include "binres/generator.hpp"

namespace binres {

/// J = mpart * <gens>: the monomial part M carries the exceptional factor of
/// the factorization J = M * I; the generator list is the fixed generating
/// set and its order is never permuted.
struct Ideal {
  Exponents mpart;
  std::vector<Generator> gens;

  static Ideal unit(std::size_t nvars, long long p);

  bool has_unit_gen() const;
  bool is_unit() const { return mpart.is_zero() && has_unit_gen(); }
  std::size_t nvars() const { return mpart.size(); }

  /// mask of variables occurring in mpart or in any generator term
  std::vector<char> support_mask() const;
};

/// Moves the componentwise minimum of exponents on exceptional variables,
/// common to every generator's monomial factor, into mpart. The represented
/// ideal is unchanged.
Ideal refactorize(const Ideal& J, const std::vector<char>& exceptional);

}  // namespace binres
