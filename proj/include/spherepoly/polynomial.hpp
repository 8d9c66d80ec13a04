#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spherepoly/monomial.hpp"
#include "spherepoly/rational.hpp"

namespace spherepoly {

/// Sparse multivariate polynomial over Rational: a finite normalized map
/// Monomial -> coefficient.  Zero coefficients are never stored.  Values are
/// immutable in spirit: every operation returns a new polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, Monomial::GrlexLess>;

  Polynomial() = default;
  Polynomial(const Rational& constant) { add_term(Monomial{}, constant); }
  Polynomial(long constant) : Polynomial(Rational(constant)) {}
  Polynomial(int constant) : Polynomial(Rational(constant)) {}

  static Polynomial variable(VarIndex index, Exponent exp = 1) {
    return monomial(Monomial::variable(index, exp), Rational(1));
  }

  static Polynomial monomial(const Monomial& m, const Rational& coefficient) {
    Polynomial p;
    p.add_term(m, coefficient);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree(); }

  VarIndex max_variable() const {
    VarIndex v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, m.max_variable());
    return v;
  }

  /// Terms in graded-lex ascending order.
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return *this;
    const auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
    return out;
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  TermMap terms_;
};

inline Polynomial pow(const Polynomial& base, unsigned long e) {
  Polynomial out(1);
  Polynomial sq = base;
  for (unsigned long k = e; k > 0; k >>= 1) {
    if (k & 1u) out *= sq;
    if (k > 1) sq *= sq;
  }
  return out;
}

/// Formal partial derivative with respect to X_j.
inline Polynomial partial_derivative(VarIndex j, const Polynomial& p) {
  if (j < 1) throw std::invalid_argument("variable index must be >= 1");
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const Exponent e = m.exponent_of(j);
    if (e == 0) continue;
    out.add_term(m.with_exponent(j, e - 1), c * Rational(long(e)));
  }
  return out;
}

/// Splits into homogeneous components, keyed by total degree.
inline std::map<int, Polynomial> homogeneous_components(const Polynomial& p) {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : p.terms()) out[m.total_degree()].add_term(m, c);
  return out;
}

inline bool is_homogeneous(const Polynomial& p) {
  return p.is_zero() || homogeneous_components(p).size() == 1;
}

/// Simultaneous substitution X_j -> rows[j] where every image polynomial has
/// total degree <= 1.  Variables absent from `rows` map to themselves.
inline Polynomial substitute_linear(const Polynomial& p,
                                    const std::map<VarIndex, Polynomial>& rows) {
  for (const auto& [j, image] : rows)
    if (image.degree() > 1)
      throw std::invalid_argument("substitute_linear image must have degree <= 1");
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    for (const auto& [var, exp] : m.factors()) {
      const auto it = rows.find(var);
      const Polynomial& image = it == rows.end() ? Polynomial::variable(var) : it->second;
      term *= pow(image, exp);
    }
    out += term;
  }
  return out;
}

/// Exact evaluation; every variable in the support must be assigned.
inline Rational evaluate(const Polynomial& p, const std::map<VarIndex, Rational>& point) {
  Rational out(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [var, exp] : m.factors()) {
      const auto it = point.find(var);
      if (it == point.end())
        throw std::invalid_argument("evaluate: missing assignment for variable x" +
                                    std::to_string(var));
      term *= pow(it->second, exp);
    }
    out += term;
  }
  return out;
}

/// Floating evaluation at a dense point (index 0 holds X_1).
inline double evaluate(const Polynomial& p, const std::vector<double>& point) {
  double out = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double term = c.to_double();
    for (const auto& [var, exp] : m.factors()) {
      if (var > point.size())
        throw std::invalid_argument("evaluate: missing assignment for variable x" +
                                    std::to_string(var));
      const double x = point[var - 1];
      for (Exponent k = 0; k < exp; ++k) term *= x;
    }
    out += term;
  }
  return out;
}

/// X_1^2 + ... + X_N^2.
inline Polynomial norm_sq_poly(int nvars) {
  Polynomial out;
  for (int i = 1; i <= nvars; ++i)
    out.add_term(Monomial::variable(static_cast<VarIndex>(i), 2), Rational(1));
  return out;
}

}  // namespace spherepoly
