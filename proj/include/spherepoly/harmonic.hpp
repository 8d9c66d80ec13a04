#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spherepoly/linalg.hpp"
#include "spherepoly/operators.hpp"
#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"

namespace spherepoly {

/// Expansion p = p_0 + ||X||^2 p_1 + ... + ||X||^{2s} p_s with every p_i
/// harmonic in the ambient dimension.
struct HarmonicExpansion {
  std::vector<Polynomial> components;
  AmbientDim ambient;
};

/// Result of canonical reduction modulo the sphere ideal (||X||^2 - a^2):
/// original = quotient * (||X||^2 - a^2) + remainder, with remainder of
/// degree <= 1 in X_N.
struct SphereRemainder {
  Polynomial remainder;
  Polynomial quotient;
  SphereSpec spec;
};

class NoRepresentativeError : public std::domain_error {
 public:
  explicit NoRepresentativeError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

// Matrix data for the solve (T T*) y = T p with T = Delta_N on homogeneous
// degree d and T* = multiplication by ||X||^2 (the Hermite-pairing adjoint).
// T T* is the Gram matrix of T* in disguise, hence invertible, so the
// exact inverse is cached per (d, N).
struct HarmonicSolver {
  std::vector<Monomial> basis;                                // of P^{d-2}_N
  std::map<Monomial, std::size_t, Monomial::GrlexLess> index;
  Matrix inverse;
};

inline std::shared_ptr<const HarmonicSolver> harmonic_solver(int degree, int nvars) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const HarmonicSolver>> cache;
  {
    const std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find({degree, nvars});
    if (it != cache.end()) return it->second;
  }

  auto solver = std::make_shared<HarmonicSolver>(HarmonicSolver{
      monomial_basis(degree - 2, nvars), {}, Matrix(0, 0)});
  const std::size_t n = solver->basis.size();
  for (std::size_t i = 0; i < n; ++i) solver->index.emplace(solver->basis[i], i);

  const AmbientDim ambient(nvars);
  Matrix op(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial image =
        laplacian(norm_sq_times(Polynomial::monomial(solver->basis[j], Rational(1)), ambient),
                  ambient);
    for (const auto& [m, c] : image.terms()) op.at(solver->index.at(m), j) = c;
  }
  solver->inverse = invert_exact(op);

  const std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(degree, nvars), std::move(solver)).first->second;
}

// One homogeneous component: f = p0 + ||X||^2 q with Delta_N p0 = 0.
inline std::pair<Polynomial, Polynomial> decompose_homogeneous(const Polynomial& f, int degree,
                                                               AmbientDim ambient) {
  if (degree <= 1) return {f, Polynomial{}};
  const auto solver = harmonic_solver(degree, ambient.value);
  const Polynomial rhs_poly = laplacian(f, ambient);
  std::vector<std::pair<std::size_t, Rational>> rhs;
  for (const auto& [m, c] : rhs_poly.terms()) rhs.emplace_back(solver->index.at(m), c);

  Polynomial q;
  const std::size_t n = solver->basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rational yi(0);
    for (const auto& [j, c] : rhs) yi += solver->inverse.at(i, j) * c;
    q.add_term(solver->basis[i], yi);
  }
  return {f - norm_sq_times(q, ambient), q};
}

}  // namespace detail

/// Unique splitting p = p0 + ||X||^2 q with p0 harmonic, computed per
/// homogeneous component by the exact (T T*) solve in the monomial basis.
inline std::pair<Polynomial, Polynomial> harmonic_decompose(const Polynomial& p,
                                                            AmbientDim ambient) {
  require_within_dimension(p, ambient.value, "harmonic_decompose");
  Polynomial p0, q;
  for (const auto& [degree, component] : homogeneous_components(p)) {
    auto [c0, cq] = detail::decompose_homogeneous(component, degree, ambient);
    p0 += c0;
    q += cq;
  }
  return {std::move(p0), std::move(q)};
}

/// Base-||X||^2 expansion: repeated harmonic division of the quotient.
inline HarmonicExpansion base_r2_expansion(const Polynomial& p, AmbientDim ambient) {
  require_within_dimension(p, ambient.value, "base_r2_expansion");
  HarmonicExpansion out{{}, ambient};
  Polynomial current = p;
  while (!current.is_zero()) {
    auto [p0, q] = harmonic_decompose(current, ambient);
    out.components.push_back(std::move(p0));
    current = std::move(q);
  }
  return out;
}

/// L_a: the unique harmonic polynomial agreeing with p as a function on
/// S^{N-1}(a), obtained by substituting a^2 for ||X||^2 in the expansion.
inline Polynomial la_project(const Polynomial& p, const SphereSpec& s) {
  if (p.degree() <= 0) return p;
  const auto expansion = base_r2_expansion(p, AmbientDim(s.dimension));
  Polynomial out;
  for (std::size_t i = 0; i < expansion.components.size(); ++i)
    out += pow(s.a2, static_cast<unsigned long>(i)) * expansion.components[i];
  return out;
}

/// Canonical reduction modulo the ideal generated by ||X||^2 - a^2: rewrites
/// X_N^2 -> a^2 - sum_{i<N} X_i^2 until the remainder has degree <= 1 in X_N.
/// remainder == 0 exactly when p lies in the ideal.
inline SphereRemainder reduce_mod_sphere(const Polynomial& p, const SphereSpec& s) {
  const auto N = static_cast<VarIndex>(s.dimension);
  require_within_dimension(p, s.dimension, "reduce_mod_sphere");
  const Polynomial generator = norm_sq_poly(s.dimension) - Polynomial(s.a2);
  Polynomial remainder = p, quotient;
  for (;;) {
    const Monomial* pick = nullptr;
    Exponent best = 1;
    Rational coeff(0);
    for (const auto& [m, c] : remainder.terms()) {
      const Exponent e = m.exponent_of(N);
      if (e > best || (pick && e == best && Monomial::compare(m, *pick) > 0)) {
        pick = &m;
        best = e;
        coeff = c;
      }
    }
    if (!pick) break;
    const Monomial reduced = pick->with_exponent(N, best - 2);
    const Polynomial step = Polynomial::monomial(reduced, coeff);
    quotient += step;
    remainder -= step * generator;
  }
  return SphereRemainder{std::move(remainder), std::move(quotient), s};
}

/// The unique member of p + Z_N(a) using only X_1..X_n, when one exists.
inline Polynomial minimal_representative(const Polynomial& p, int nvars, const SphereSpec& s) {
  if (nvars < 0 || nvars >= s.dimension)
    throw std::invalid_argument("minimal_representative: need 0 <= n < N");
  Polynomial remainder = reduce_mod_sphere(p, s).remainder;
  if (static_cast<int>(remainder.max_variable()) > nvars)
    throw NoRepresentativeError("no representative in " + std::to_string(nvars) + " variables");
  return remainder;
}

}  // namespace spherepoly
