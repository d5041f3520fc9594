#pragma once

#include <optional>
#include <string>

#include "binres/rational.hpp"

namespace binres {

/// An element of the coefficient field: Q when characteristic 0, F_p otherwise.
/// All arithmetic is exact; there is no floating point anywhere in the kernel.
class FieldElement {
 public:
  FieldElement() : p_(0), q_(0), r_(0) {}

  static FieldElement zero(long long p) { return FieldElement(p, 0, 0); }
  static FieldElement one(long long p) { return FieldElement(p, 1, 1 % (p == 0 ? 2 : p)); }
  static FieldElement from_rational(long long p, const Rational& q);
  static FieldElement from_int(long long p, long long n) { return from_rational(p, Rational(n)); }

  long long characteristic() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;
  /// Exact integer power, negative exponents allowed for nonzero elements.
  FieldElement pow(long long e) const;
  /// Exact k-th root if one exists in the field (k >= 1).
  std::optional<FieldElement> root(long long k) const;

  /// Rational value (characteristic 0 only).
  const Rational& rational() const;
  /// Residue 0..p-1 (positive characteristic only).
  long long residue() const;

  std::string str() const;

 private:
  FieldElement(long long p, Rational q, long long r) : p_(p), q_(std::move(q)), r_(r) {}
  void check_same(const FieldElement& o) const;

  long long p_;  // 0 or prime
  Rational q_;   // value when p_ == 0
  long long r_;  // residue when p_ > 0
};

}  // namespace binres
