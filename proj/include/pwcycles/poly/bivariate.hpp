#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pwcycles/affine_map.hpp"
#include "pwcycles/errors.hpp"
#include "pwcycles/poly/univariate.hpp"
#include "pwcycles/rational.hpp"

namespace pwc {

enum class Var { First, Second };

/// Sparse polynomial in two variables over Q. Keys are exponent pairs
/// (i, j) for u^i v^j; zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Rational>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(Terms terms) : t_(std::move(terms)) { prune(); }

  static BivariatePolynomial constant(const Rational& v) { return monomial(v, 0, 0); }
  static BivariatePolynomial monomial(const Rational& v, int i, int j) {
    BivariatePolynomial p;
    if (v != 0) p.t_[{i, j}] = v;
    return p;
  }
  static BivariatePolynomial first() { return monomial(1, 1, 0); }
  static BivariatePolynomial second() { return monomial(1, 0, 1); }
  /// Embeds a univariate polynomial as a function of one of the variables.
  static BivariatePolynomial from_univariate(const UnivariatePolynomial& p, Var var) {
    BivariatePolynomial r;
    for (int k = 0; k <= p.degree(); ++k) {
      const Rational& v = p.coefficients()[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      r.t_[var == Var::First ? Exponent{k, 0} : Exponent{0, k}] = v;
    }
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  Rational coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rational(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, v] : t_) d = std::max(d, e.first + e.second);
    return d;
  }
  int degree_in(Var var) const {
    int d = -1;
    for (const auto& [e, v] : t_) d = std::max(d, var == Var::First ? e.first : e.second);
    return d;
  }

  template <class T>
  T evaluate(const T& u, const T& v) const {
    // Horner in u over coefficient polynomials in v.
    const int du = degree_in(Var::First);
    if (du < 0) return T(0);
    std::vector<std::vector<std::pair<int, const Rational*>>> rows(static_cast<std::size_t>(du) + 1);
    for (const auto& [e, c] : t_) rows[static_cast<std::size_t>(e.first)].push_back({e.second, &c});
    T acc = T(0);
    for (int i = du; i >= 0; --i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      acc = acc * u + horner_row(row, v);
    }
    return acc;
  }

  Rational operator()(const Rational& u, const Rational& v) const { return evaluate<Rational>(u, v); }
  double operator()(double u, double v) const { return evaluate<double>(u, v); }

  BivariatePolynomial operator-() const {
    auto r = *this;
    for (auto& [e, v] : r.t_) v = -v;
    return r;
  }
  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [e, v] : o.t_) {
      auto [it, inserted] = t_.try_emplace(e, v);
      if (!inserted) {
        it->second += v;
        if (it->second == 0) t_.erase(it);
      }
    }
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) { return *this += -o; }
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    Terms r;
    for (const auto& [ea, va] : a.t_)
      for (const auto& [eb, vb] : b.t_) r[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
    return BivariatePolynomial(std::move(r));
  }
  friend BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a) {
    if (s == 0) return {};
    auto r = a;
    for (auto& [e, v] : r.t_) v *= s;
    return r;
  }
  BivariatePolynomial& operator*=(const BivariatePolynomial& o) { return *this = *this * o; }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.t_ == b.t_; }

  BivariatePolynomial pow(unsigned e) const {
    BivariatePolynomial result = constant(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  BivariatePolynomial partial(Var var) const {
    Terms r;
    for (const auto& [e, v] : t_) {
      int k = var == Var::First ? e.first : e.second;
      if (k == 0) continue;
      Exponent ne = var == Var::First ? Exponent{k - 1, e.second} : Exponent{e.first, k - 1};
      r[ne] = v * k;
    }
    return BivariatePolynomial(std::move(r));
  }

  /// p(v, u).
  BivariatePolynomial swapped() const {
    Terms r;
    for (const auto& [e, v] : t_) r[{e.second, e.first}] = v;
    return BivariatePolynomial(std::move(r));
  }
  bool is_symmetric() const { return *this == swapped(); }

  /// Substitutes (u, v) := (U(s, t), V(s, t)).
  BivariatePolynomial substitute(const BivariatePolynomial& U, const BivariatePolynomial& V) const {
    const int du = degree_in(Var::First), dv = degree_in(Var::Second);
    std::vector<BivariatePolynomial> pu{constant(1)}, pv{constant(1)};
    for (int k = 1; k <= du; ++k) pu.push_back(pu.back() * U);
    for (int k = 1; k <= dv; ++k) pv.push_back(pv.back() * V);
    BivariatePolynomial r;
    for (const auto& [e, v] : t_)
      r += v * (pu[static_cast<std::size_t>(e.first)] * pv[static_cast<std::size_t>(e.second)]);
    return r;
  }

  /// Fixes one variable at a rational value, leaving a univariate polynomial
  /// in the other one.
  UnivariatePolynomial fix(Var var, const Rational& value) const {
    const int keep = degree_in(var == Var::First ? Var::Second : Var::First);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(keep, 0)) + 1);
    for (const auto& [e, v] : t_) {
      int fixed_exp = var == Var::First ? e.first : e.second;
      int kept_exp = var == Var::First ? e.second : e.first;
      Rational term = v;
      for (int k = 0; k < fixed_exp; ++k) term *= value;
      c[static_cast<std::size_t>(kept_exp)] += term;
    }
    return UnivariatePolynomial(std::move(c));
  }

  /// p(t, t).
  UnivariatePolynomial diagonal() const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(), 0)) + 1);
    for (const auto& [e, v] : t_) c[static_cast<std::size_t>(e.first + e.second)] += v;
    return UnivariatePolynomial(std::move(c));
  }

  /// Coefficients of p viewed as a polynomial in `var`, each one a univariate
  /// polynomial in the other variable. Index k holds the coefficient of var^k.
  std::vector<UnivariatePolynomial> coefficients_in(Var var) const {
    const int d = degree_in(var), other = degree_in(var == Var::First ? Var::Second : Var::First);
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(std::max(d, -1) + 1),
                                           std::vector<Rational>(static_cast<std::size_t>(std::max(other, 0)) + 1));
    for (const auto& [e, v] : t_) {
      int k = var == Var::First ? e.first : e.second;
      int m = var == Var::First ? e.second : e.first;
      raw[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] = v;
    }
    std::vector<UnivariatePolynomial> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
  }

  /// Leading term under graded-lex order (total degree, then power of the
  /// first variable). Undefined for the zero polynomial.
  std::pair<Exponent, Rational> leading_term() const {
    auto best = t_.begin();
    for (auto it = t_.begin(); it != t_.end(); ++it) {
      int d = it->first.first + it->first.second, bd = best->first.first + best->first.second;
      if (d > bd || (d == bd && it->first.first > best->first.first)) best = it;
    }
    return *best;
  }

  /// Scaled copy with coprime integer coefficients and a positive graded-lex
  /// leading coefficient.
  BivariatePolynomial normalized() const {
    if (is_zero()) return {};
    Integer l = 1, g = 0;
    for (const auto& [e, v] : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& [e, v] : t_) {
      Rational s = v * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    if (leading_term().second < 0) g = -g;
    return Rational(Rational(l, 1) / Rational(g)) * *this;
  }

  /// Human-readable form in descending graded-lex order, e.g.
  /// "6*y1*y2 - 7*y1 - 7*y2 - 46".
  std::string to_string(const std::array<std::string, 2>& names = {"x", "y"}) const;

 private:
  template <class T>
  static T horner_row(const std::vector<std::pair<int, const Rational*>>& row, const T& v) {
    // row sorted ascending by exponent of v.
    T acc = T(0);
    int prev = row.empty() ? 0 : row.back().first;
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      for (int k = it->first; k < prev; ++k) acc = acc * v;
      acc = acc + from_rational<T>(*it->second);
      prev = it->first;
    }
    for (int k = 0; k < prev; ++k) acc = acc * v;
    return acc;
  }

  void prune() {
    for (auto it = t_.begin(); it != t_.end();) it = it->second == 0 ? t_.erase(it) : std::next(it);
  }
  Terms t_;
};

inline std::string BivariatePolynomial::to_string(const std::array<std::string, 2>& names) const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> order(t_.begin(), t_.end());
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [e, v] : order) {
    Rational mag = abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    std::string mono;
    auto append = [&mono](const std::string& n, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += n;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    append(names[0], e.first);
    append(names[1], e.second);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

/// p(a X + b Y + c, alpha X + beta Y + gamma), fully expanded.
inline BivariatePolynomial compose_affine(const BivariatePolynomial& p, const AffineMap& m) {
  using B = BivariatePolynomial;
  B u = B::monomial(m.a, 1, 0) + B::monomial(m.b, 0, 1) + B::constant(m.c);
  B v = B::monomial(m.alpha, 1, 0) + B::monomial(m.beta, 0, 1) + B::constant(m.gamma);
  return p.substitute(u, v);
}

inline BivariatePolynomial partial_derivative(const BivariatePolynomial& p, Var var) { return p.partial(var); }

/// q with p = (u - v) q exactly. Throws NotDivisible if p(t, t) != 0.
inline BivariatePolynomial factor_out_difference(const BivariatePolynomial& p) {
  if (!p.diagonal().is_zero()) throw NotDivisible("polynomial does not vanish on the diagonal");
  auto rem = p.terms();
  BivariatePolynomial::Terms q;
  // Repeatedly clear the term with the largest power of u.
  while (!rem.empty()) {
    auto top = rem.begin();
    for (auto it = rem.begin(); it != rem.end(); ++it)
      if (it->first.first > top->first.first ||
          (it->first.first == top->first.first && it->first.second < top->first.second))
        top = it;
    auto [e, c] = *top;
    if (e.first == 0) throw NotDivisible("nonzero remainder after dividing by the difference");
    q[{e.first - 1, e.second}] += c;
    rem.erase(top);
    auto& nxt = rem[{e.first - 1, e.second + 1}];
    nxt += c;
    if (nxt == 0) rem.erase({e.first - 1, e.second + 1});
  }
  return BivariatePolynomial(std::move(q));
}

/// P(z, w) with P(u + v, u v) = p(u, v). Throws NotSymmetric if p(u,v) != p(v,u).
inline BivariatePolynomial symmetric_reduce(const BivariatePolynomial& p) {
  if (!p.is_symmetric()) throw NotSymmetric("p(y1,y2) != p(y2,y1)");
  using B = BivariatePolynomial;
  const B z = B::first() + B::second();
  const B w = B::first() * B::second();
  B rem = p, out;
  while (!rem.is_zero()) {
    // Lex-leading term u^i v^j; symmetry forces i >= j.
    auto lead = rem.terms().begin();
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
      if (it->first.first > lead->first.first ||
          (it->first.first == lead->first.first && it->first.second > lead->first.second))
        lead = it;
    auto [e, c] = *lead;
    if (e.first < e.second) throw NotSymmetric("lex-leading term below diagonal");
    out += B::monomial(c, e.first - e.second, e.second);
    rem -= c * (z.pow(static_cast<unsigned>(e.first - e.second)) * w.pow(static_cast<unsigned>(e.second)));
  }
  return out;
}

}  // namespace pwc
