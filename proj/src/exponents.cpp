#include "binres/exponents.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

bool Exponents::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](const Rational& v) { return v == 0; });
}

bool Exponents::integral() const {
  return std::all_of(e.begin(), e.end(), [](const Rational& v) { return is_integral(v); });
}

bool Exponents::nonnegative() const {
  return std::all_of(e.begin(), e.end(), [](const Rational& v) { return v >= 0; });
}

Exponents Exponents::operator+(const Exponents& o) const {
  if (size() != o.size()) fail(ErrorKind::Input, "exponent dimension mismatch");
  Exponents r(size());
  for (std::size_t i = 0; i < size(); ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Exponents Exponents::operator-(const Exponents& o) const {
  if (size() != o.size()) fail(ErrorKind::Input, "exponent dimension mismatch");
  Exponents r(size());
  for (std::size_t i = 0; i < size(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Exponents Exponents::operator*(const Rational& s) const {
  Exponents r(size());
  for (std::size_t i = 0; i < size(); ++i) r.e[i] = e[i] * s;
  return r;
}

Exponents Exponents::min(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) fail(ErrorKind::Input, "exponent dimension mismatch");
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

Rational Exponents::degree(const std::vector<int>& vars) const {
  Rational s = 0;
  for (int v : vars) s += e[(std::size_t)v];
  return s;
}

Rational Exponents::total() const {
  Rational s = 0;
  for (const auto& v : e) s += v;
  return s;
}

std::vector<int> Exponents::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < size(); ++i)
    if (e[i] != 0) s.push_back((int)i);
  return s;
}

bool Exponents::supported_on(const std::vector<char>& allowed) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (e[i] != 0 && !allowed[i]) return false;
  return true;
}

Exponents Exponents::restricted(const std::vector<char>& keep) const {
  Exponents r(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (keep[i]) r.e[i] = e[i];
  return r;
}

}  // namespace binres
