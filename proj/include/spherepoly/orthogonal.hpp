#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "spherepoly/harmonic.hpp"
#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"

namespace spherepoly {

/// Monic orthogonal family q_0, ..., q_m in one variable, together with the
/// pairing it is orthogonal under.
struct OrthogonalFamily {
  std::vector<Polynomial> members;
  Pairing pairing;
};

/// Monic probabilists' Hermite polynomial H_m(X_1), via the three-term
/// recursion H_{m+1} = X H_m - m H_{m-1}.
inline Polynomial hermite_poly(int m) {
  if (m < 0) throw std::invalid_argument("hermite_poly: order must be >= 0");
  Polynomial prev(1), current = Polynomial::variable(1);
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    Polynomial next = Polynomial::variable(1) * current - Rational(long(k)) * prev;
    prev = std::move(current);
    current = std::move(next);
  }
  return current;
}

/// Monic degree-m solution of the Gegenbauer equation
///   (1 - y^2) p'' - (2b+1) y p' + m(m+2b) p = 0,
/// built by the downward coefficient recursion
///   c_m = 1,  c_k = (k+2)(k+1) c_{k+2} / (k(k+2b) - m(m+2b)).
/// Only exponents of the same parity as m appear.
inline Polynomial gegenbauer_monic(const Rational& b, int m) {
  if (m < 0) throw std::invalid_argument("gegenbauer_monic: order must be >= 0");
  const Rational two_b = Rational(2) * b;
  const Rational target = Rational(long(m)) * (Rational(long(m)) + two_b);
  Polynomial out;
  Rational c(1);
  out.add_term(Monomial::variable(1, static_cast<Exponent>(m)), c);
  for (int k = m - 2; k >= 0; k -= 2) {
    const Rational denom = Rational(long(k)) * (Rational(long(k)) + two_b) - target;
    if (denom.is_zero())
      throw std::domain_error("gegenbauer_monic: zero denominator in coefficient recursion");
    c = Rational(long(k) + 2) * Rational(long(k) + 1) * c / denom;
    if (k == 0)
      out.add_term(Monomial{}, c);
    else
      out.add_term(Monomial::variable(1, static_cast<Exponent>(k)), c);
  }
  return out;
}

/// Zonal polynomials q_0, ..., q_m in X_1: Gram-Schmidt of 1, X_1, X_1^2, ...
/// under the spherical pairing, realized as one exact Gram solve per degree.
inline OrthogonalFamily zonal_family(int m, const SphereSpec& s) {
  if (m < 0) throw std::invalid_argument("zonal_family: order must be >= 0");
  if (s.dimension < 2) throw std::invalid_argument("zonal_family: requires N >= 2");
  OrthogonalFamily family{{}, Pairing::sphere(s)};
  std::vector<Polynomial> monomials;
  for (int k = 0; k <= m; ++k) {
    const Polynomial xk = k == 0 ? Polynomial(1) : Polynomial::variable(1, static_cast<Exponent>(k));
    if (k == 0) {
      family.members.push_back(xk);
    } else {
      const auto solve = gram_solve(monomials, xk, family.pairing);
      Polynomial q = xk;
      for (std::size_t i = 0; i < monomials.size(); ++i)
        q -= solve.coefficients[i] * monomials[i];
      family.members.push_back(std::move(q));
    }
    monomials.push_back(xk);
  }
  return family;
}

inline Polynomial zonal_poly(int m, const SphereSpec& s) {
  return zonal_family(m, s).members.back();
}

/// The zonal harmonic of degree m: L_a applied to the zonal polynomial, a
/// homogeneous harmonic polynomial invariant under rotations fixing X_1.
inline Polynomial zonal_harmonic(int m, const SphereSpec& s) {
  return la_project(zonal_poly(m, s), s);
}

namespace detail {

inline Polynomial projection_complement(const Polynomial& p, int degree_bound, int nvars,
                                        const Pairing& pairing) {
  if (p.degree() > degree_bound)
    throw std::invalid_argument("projection complement: polynomial degree exceeds bound");
  std::vector<Polynomial> basis;
  for (const Monomial& m : monomial_basis_upto(degree_bound - 1, nvars))
    basis.push_back(Polynomial::monomial(m, Rational(1)));
  if (basis.empty()) return p;
  const auto solve = gram_solve(basis, p, pairing);
  Polynomial out = p;
  for (std::size_t i = 0; i < basis.size(); ++i) out -= solve.coefficients[i] * basis[i];
  return out;
}

}  // namespace detail

/// (I - Pi^{<=d}) p under the Gaussian pairing: the component of p orthogonal
/// to every polynomial of total degree <= d-1 in its variables.  `nvars`
/// may widen the basis; by projection consistency the result is unchanged.
inline Polynomial gauss_projection_complement(const Polynomial& p, int degree_bound,
                                              int nvars = 0) {
  const int k = std::max(nvars, static_cast<int>(p.max_variable()));
  return detail::projection_complement(p, degree_bound, k, Pairing::gaussian());
}

/// (I - dotPi^{<=d}_{k,N}) p under the pairing on S^{N-1}(a).  The Gram
/// matrix is positive definite whenever k < N; a singular matrix signals
/// misuse with k >= N.
inline Polynomial sphere_projection_complement(const Polynomial& p, int nvars, int degree_bound,
                                               const SphereSpec& s) {
  if (static_cast<int>(p.max_variable()) > nvars)
    throw std::invalid_argument("sphere_projection_complement: polynomial uses more variables");
  return detail::projection_complement(p, degree_bound, nvars, Pairing::sphere(s));
}

}  // namespace spherepoly
