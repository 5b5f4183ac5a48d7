#pragma once

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "pwcycles/errors.hpp"

namespace pwc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", a signed integer, or a plain decimal such as "-0.8" into an
/// exact rational. Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational");

  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("bad rational '" + s + "'");
    Integer d(strip_plus(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(Integer(strip_plus(num), 10), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::string digits = strip_plus(neg ? whole.substr(1) : whole);
    if (digits.empty()) digits = "0";
    if (!valid_int(digits) || (!frac.empty() && !valid_int(frac)) || (!frac.empty() && !std::isdigit(static_cast<unsigned char>(frac[0]))))
      throw std::invalid_argument("bad decimal '" + s + "'");
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r(Integer(digits + frac, 10), den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  if (!valid_int(s)) throw std::invalid_argument("bad rational '" + s + "'");
  return Rational(Integer(strip_plus(s), 10));
}

/// Exact binary expansion of a finite double.
inline Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value cannot be rationalized");
  return Rational(v);
}

/// Nearest double to `r` (mpq_get_d alone truncates toward zero).
inline double to_double(const Rational& r) {
  double d = r.get_d();
  if (!std::isfinite(d) || r == 0) return d;
  Rational err = abs(r - Rational(d));
  for (double n : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
    if (!std::isfinite(n)) continue;
    Rational e = abs(r - Rational(n));
    if (e < err) {
      err = e;
      d = n;
    }
  }
  return d;
}

/// Converts an exact coefficient into the numeric type used for evaluation.
template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, double>)
    return to_double(r);
  else
    return T(r);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace pwc
