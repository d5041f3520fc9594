#include "binres/field.hpp"

#include "binres/error.hpp"

namespace binres {

namespace {

long long mod_norm(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long mod_inv(long long a, long long p) {
  // extended Euclid
  long long t = 0, nt = 1, r = p, nr = mod_norm(a, p);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(ErrorKind::Input, "element not invertible mod " + std::to_string(p));
  return mod_norm(t, p);
}

long long mod_mul(long long a, long long b, long long p) {
  return (long long)((__int128)a * b % p);
}

}  // namespace

FieldElement FieldElement::from_rational(long long p, const Rational& q) {
  if (p == 0) return FieldElement(0, q, 0);
  long long num = mod_norm(to_ll(rat_num(q) % p), p);
  long long den = mod_norm(to_ll(rat_den(q) % p), p);
  if (den == 0) fail(ErrorKind::Input, "denominator vanishes mod " + std::to_string(p));
  return FieldElement(p, 0, mod_mul(num, mod_inv(den, p), p));
}

bool FieldElement::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool FieldElement::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

void FieldElement::check_same(const FieldElement& o) const {
  if (p_ != o.p_) fail(ErrorKind::Input, "mixed characteristics in field arithmetic");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  if (p_ == 0) return FieldElement(0, q_ + o.q_, 0);
  return FieldElement(p_, 0, mod_norm(r_ + o.r_, p_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  if (p_ == 0) return FieldElement(0, q_ - o.q_, 0);
  return FieldElement(p_, 0, mod_norm(r_ - o.r_, p_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  if (p_ == 0) return FieldElement(0, q_ * o.q_, 0);
  return FieldElement(p_, 0, mod_mul(r_, o.r_, p_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const {
  if (p_ == 0) return FieldElement(0, -q_, 0);
  return FieldElement(p_, 0, mod_norm(-r_, p_));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return p_ == o.p_ && (p_ == 0 ? q_ == o.q_ : r_ == o.r_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::Input, "inverse of zero");
  if (p_ == 0) return FieldElement(0, 1 / q_, 0);
  return FieldElement(p_, 0, mod_inv(r_, p_));
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement acc = one(p_), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<FieldElement> FieldElement::root(long long k) const {
  if (k <= 0) fail(ErrorKind::Input, "root index must be positive");
  if (k == 1 || is_zero() || is_one()) return *this;
  if (p_ > 0) {
    // p-th power roots in the prime field are the identity (Fermat); anything
    // else is found by exhaustive search, exact and fine for the small moduli
    // this kernel works with.
    if (k % p_ == 0) {
      long long k1 = k;
      while (k1 % p_ == 0) k1 /= p_;
      if (k1 == 1) return *this;
    }
    for (long long x = 0; x < p_; ++x) {
      if (FieldElement(p_, 0, x).pow(k) == *this) return FieldElement(p_, 0, x);
    }
    return std::nullopt;
  }
  // exact k-th root of a rational: both numerator and denominator must be
  // perfect k-th powers (sign handled for odd k)
  Int num = rat_num(q_), den = rat_den(q_);
  bool neg = num < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  if (neg) num = -num;
  auto iroot = [&](const Int& v) -> std::optional<Int> {
    if (v == 0) return Int(0);
    Int lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, (unsigned)k) < v) hi <<= 1;
    while (lo < hi) {
      Int mid = (lo + hi) / 2;
      if (boost::multiprecision::pow(mid, (unsigned)k) < v) lo = mid + 1; else hi = mid;
    }
    if (boost::multiprecision::pow(lo, (unsigned)k) == v) return lo;
    return std::nullopt;
  };
  auto rn = iroot(num), rd = iroot(den);
  if (!rn || !rd) return std::nullopt;
  Rational r(*rn, *rd);
  if (neg) r = -r;
  return FieldElement(0, r, 0);
}

const Rational& FieldElement::rational() const {
  if (p_ != 0) fail(ErrorKind::Input, "rational() in positive characteristic");
  return q_;
}

long long FieldElement::residue() const {
  if (p_ == 0) fail(ErrorKind::Input, "residue() in characteristic zero");
  return r_;
}

std::string FieldElement::str() const {
  return p_ == 0 ? rat_str(q_) : std::to_string(r_);
}

}  // namespace binres
