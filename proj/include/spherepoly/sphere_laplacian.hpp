#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "spherepoly/harmonic.hpp"
#include "spherepoly/operators.hpp"
#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"

namespace spherepoly {

/// Spherical Laplacian of p on S^{N-1}(a): the unique polynomial in p's own
/// variables congruent to (1/a^2) ||M||^2 p modulo the sphere ideal.
struct SlapResult {
  Polynomial value;
  AmbientDim ambient;
  SphereSpec spec;
};

namespace detail {

// Base case on a single power, from the Casimir on X_i^m reduced mod the
// ideal:  Delta_S(X_i^m) = [-m(N-1) X_i^m + m(m-1)(a^2 - X_i^2) X_i^{m-2}] / a^2.
inline Polynomial slap_power(VarIndex var, Exponent m, const SphereSpec& s) {
  const long N = s.dimension;
  Polynomial out = Rational(-long(m) * (N - 1)) * Polynomial::variable(var, m);
  if (m >= 2) {
    const Polynomial a2_minus_sq = Polynomial(s.a2) - Polynomial::variable(var, 2);
    out += Rational(long(m) * (long(m) - 1)) * a2_minus_sq * Polynomial::variable(var, m - 2);
  }
  return Rational(1) / s.a2 * out;
}

// Product rule for homogeneous factors in disjoint variables:
//   Delta_S(pq) = (Delta_S p) q - 2 d_p d_q / a^2 * pq + p (Delta_S q).
// A monomial is split as (largest-index variable power) x (rest); any split
// yields the same result by uniqueness of the minimal representative.
inline Polynomial slap_monomial(const Monomial& m, const SphereSpec& s) {
  if (m.is_constant()) return Polynomial{};
  const auto& [var, exp] = m.factors().back();
  const Monomial rest = m.with_exponent(var, 0);
  const Polynomial head = slap_power(var, exp, s);
  if (rest.is_constant()) return head;
  const Polynomial rest_poly = Polynomial::monomial(rest, Rational(1));
  const long dp = exp, dq = rest.total_degree();
  Polynomial out = head * rest_poly;
  out += Rational(-2 * dp * dq) / s.a2 * Polynomial::monomial(m, Rational(1));
  out += Polynomial::variable(var, exp) * slap_monomial(rest, s);
  return out;
}

}  // namespace detail

inline SlapResult sphere_laplacian(const Polynomial& p, const SphereSpec& s) {
  const int N = s.dimension;
  require_within_dimension(p, N, "sphere_laplacian");
  const AmbientDim ambient(N);
  if (static_cast<int>(p.max_variable()) == N) {
    // No variables to spare: Delta_S is just the scaled Casimir.
    return SlapResult{Rational(1) / s.a2 * casimir(p, ambient), ambient, s};
  }
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out += c * detail::slap_monomial(m, s);
  return SlapResult{std::move(out), ambient, s};
}

/// Hermite operator sum_j (d_j^2 - X_j d_j), the large-N limit of the
/// spherical Laplacian on S^{N-1}(sqrt N); the sum is finite on any
/// polynomial's support.
inline Polynomial hermite_operator(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [var, exp] : m.factors()) {
      if (exp >= 2)
        out.add_term(m.with_exponent(var, exp - 2), c * Rational(long(exp) * (long(exp) - 1)));
      out.add_term(m, c * Rational(-long(exp)));
    }
  }
  return out;
}

/// Largest coefficient gap between Delta_{S^{N-1}(sqrt N)} p and the Hermite
/// operator applied to p; an exact rational that tends to 0 as N grows.
inline Rational slap_limit_error(const Polynomial& p, AmbientDim ambient) {
  if (static_cast<int>(p.max_variable()) >= ambient.value)
    throw std::invalid_argument("slap_limit_error: need max variable index < N");
  const SphereSpec s(ambient.value, Rational(long(ambient.value)));
  const Polynomial diff = sphere_laplacian(p, s).value - hermite_operator(p);
  Rational out(0);
  for (const auto& [m, c] : diff.terms()) out = std::max(out, abs(c));
  return out;
}

}  // namespace spherepoly
