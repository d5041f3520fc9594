#pragma once

#include <string>
#include <vector>

#include "binres/rational.hpp"

namespace binres {

/// Exponent vector over the chart variables, dense, exact rationals.
/// Chart ideals keep these integral; rational values appear only in the
/// weighted monomials of companion/junior ideals and in mpart bookkeeping.
struct Exponents {
  std::vector<Rational> e;

  Exponents() = default;
  explicit Exponents(std::size_t n) : e(n, Rational(0)) {}

  std::size_t size() const { return e.size(); }
  const Rational& operator[](std::size_t i) const { return e[i]; }
  Rational& operator[](std::size_t i) { return e[i]; }

  bool is_zero() const;
  bool integral() const;
  bool nonnegative() const;

  Exponents operator+(const Exponents& o) const;
  /// Componentwise difference; caller guarantees the result stays meaningful.
  Exponents operator-(const Exponents& o) const;
  Exponents operator*(const Rational& s) const;
  bool operator==(const Exponents& o) const { return e == o.e; }

  static Exponents min(const Exponents& a, const Exponents& b);

  /// Sum of entries at the given variable indices.
  Rational degree(const std::vector<int>& vars) const;
  /// Sum over all entries.
  Rational total() const;

  std::vector<int> support() const;
  /// true when every entry with nonzero value lies in `allowed` (given as mask).
  bool supported_on(const std::vector<char>& allowed) const;

  /// Keep entries at indices in `keep` (mask), zero the rest.
  Exponents restricted(const std::vector<char>& keep) const;
};

}  // namespace binres
