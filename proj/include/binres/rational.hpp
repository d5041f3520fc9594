#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <stdexcept>

namespace binres {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return rat_den(q) == 1; }

inline long long to_ll(const Int& n) { return n.convert_to<long long>(); }

/// Integer value of an exact-integral rational; throws on fractional input.
inline long long rat_to_ll(const Rational& q) {
  if (!is_integral(q)) throw std::invalid_argument("expected integral rational");
  return to_ll(rat_num(q));
}

/// Prints "n" or "n/d" with d > 0.
inline std::string rat_str(const Rational& q) {
  std::string s = rat_num(q).str();
  if (!is_integral(q)) s += "/" + rat_den(q).str();
  return s;
}

}  // namespace binres
