#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pwcycles/errors.hpp"
#include "pwcycles/rational.hpp"

namespace pwc {

/// Dense polynomial in one variable over Q, lowest degree first. The
/// coefficient vector never has a trailing zero, so the zero polynomial is the
/// empty vector and has degree -1.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UnivariatePolynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UnivariatePolynomial constant(const Rational& v) { return UnivariatePolynomial({v}); }
  static UnivariatePolynomial monomial(const Rational& v, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c.back() = v;
    return UnivariatePolynomial(std::move(c));
  }
  static UnivariatePolynomial variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  template <class T>
  T evaluate(const T& t) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + from_rational<T>(*it);
    return acc;
  }
  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  double operator()(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
  }

  UnivariatePolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return UnivariatePolynomial(std::move(d));
  }

  UnivariatePolynomial operator-() const {
    auto r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UnivariatePolynomial(std::move(r));
  }
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a + (-b);
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UnivariatePolynomial(std::move(r));
  }
  friend UnivariatePolynomial operator*(const Rational& s, const UnivariatePolynomial& a) {
    if (s == 0) return {};
    auto r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) { return *this = *this + o; }
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) { return *this = *this - o; }
  UnivariatePolynomial& operator*=(const UnivariatePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.c_ == b.c_; }

  UnivariatePolynomial pow(unsigned e) const {
    UnivariatePolynomial result = constant(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Polynomial composition this(inner(t)).
  UnivariatePolynomial compose(const UnivariatePolynomial& inner) const {
    UnivariatePolynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  /// Scaled copy with coprime integer coefficients and positive leading
  /// coefficient. Same roots; zero stays zero.
  UnivariatePolynomial primitive() const {
    if (is_zero()) return {};
    Integer l = 1, g = 0;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r[i] = c_[i] * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_num_mpz_t());
    }
    if (leading() < 0) g = -g;
    for (auto& v : r) v /= g;
    return UnivariatePolynomial(std::move(r));
  }

  /// Same, but only ever divided by a positive scalar (sign preserved). Used
  /// where signs matter, e.g. Sturm chains.
  UnivariatePolynomial positive_primitive() const {
    auto p = primitive();
    if (!is_zero() && leading() < 0) p = -p;
    return p;
  }

  UnivariatePolynomial monic() const {
    if (is_zero()) return {};
    return Rational(1 / leading()) * *this;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r, deg r < deg b.
inline std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                                    const UnivariatePolynomial& b) {
  if (b.is_zero()) throw DegenerateInput("division by the zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UnivariatePolynomial{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] * inv_lead;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(rem))};
}

/// Quotient of a division known to be exact; throws NotDivisible otherwise.
inline UnivariatePolynomial exact_divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("univariate remainder is nonzero");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second.primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), made primitive.
inline UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  auto g = gcd(p, p.derivative());
  return exact_divide(p, g).primitive();
}

inline std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& v = c_[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    Rational mag = abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace pwc
