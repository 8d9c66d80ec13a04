#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spherepoly/linalg.hpp"
#include "spherepoly/polynomial.hpp"

namespace spherepoly {

/// The sphere S^{N-1}(a) identified by its ambient dimension N and squared
/// radius a^2.  Radii are always specified through a^2 so every spherical
/// formula stays rational; a^2 = N gives the principal sphere S^{N-1}(sqrt N).
struct SphereSpec {
  SphereSpec(int dimension_, Rational a2_) : dimension(dimension_), a2(std::move(a2_)) {
    if (dimension < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (a2.sign() <= 0) throw std::invalid_argument("squared radius must be positive");
  }
  int dimension;
  Rational a2;
};

/// Product standard-Gaussian moment of a monomial: prod_i (e_i - 1)!! when
/// every exponent is even, 0 otherwise.
inline Rational gaussian_moment(const Monomial& m) {
  Rational out(1);
  for (const auto& [var, exp] : m.factors()) {
    if (exp % 2 != 0) return Rational(0);
    out *= double_factorial(exp - 1);
  }
  return out;
}

inline Rational gaussian_integral(const Polynomial& p) {
  Rational out(0);
  for (const auto& [m, c] : p.terms()) out += c * gaussian_moment(m);
  return out;
}

/// L^2 inner product with respect to the product Gaussian measure; does not
/// depend on any ambient dimension.
inline Rational gaussian_inner(const Polynomial& p, const Polynomial& q) {
  return gaussian_integral(p * q);
}

/// Hermite pairing: <X^j, X^k>_h = delta_{jk} * prod_i j_i!.
inline Rational hermite_inner(const Polynomial& p, const Polynomial& q) {
  Rational out(0);
  for (const auto& [m, c] : p.terms()) {
    const Rational qc = q.coefficient(m);
    if (qc.is_zero()) continue;
    Rational weight(1);
    for (const auto& [var, exp] : m.factors()) weight *= factorial(exp);
    out += c * qc * weight;
  }
  return out;
}

/// N(N+2)...(N+d-2) for even d >= 0: the rational value of the Gamma ratio
/// 2^{d/2} Gamma((N+d)/2) / Gamma(N/2).  Empty product for d = 0.
inline Rational degree_factor(int d, int N) {
  if (d < 0 || d % 2 != 0) throw std::invalid_argument("degree_factor requires even d >= 0");
  if (N < 1) throw std::invalid_argument("degree_factor requires N >= 1");
  Rational out(1);
  for (int i = 0; i < d / 2; ++i) out *= Rational(long(N) + 2 * i);
  return out;
}

/// a_{d,N} = prod_{j=1}^{d} (1 + 2(j-1)/N), the factor relating the Gaussian
/// pairing to the pairing on S^{N-1}(sqrt N); tends to 1 as N grows.
inline Rational adN_factor(int d, int N) {
  if (d < 0) throw std::invalid_argument("adN_factor requires d >= 0");
  if (N < 1) throw std::invalid_argument("adN_factor requires N >= 1");
  Rational out(1);
  for (int j = 1; j <= d; ++j) out *= Rational(long(N) + 2 * (j - 1), long(N));
  return out;
}

inline void require_within_dimension(const Polynomial& p, int N, const char* who) {
  if (static_cast<long>(p.max_variable()) > N)
    throw std::invalid_argument(std::string(who) + ": variable index exceeds ambient dimension");
}

/// Integral over S^{N-1}(a) with unit-mass uniform measure.  Each homogeneous
/// part of even degree e contributes a^e / (N(N+2)...(N+e-2)) times its
/// Gaussian integral; odd-degree parts vanish.
inline Rational sphere_integral(const Polynomial& p, const SphereSpec& s) {
  require_within_dimension(p, s.dimension, "sphere_integral");
  Rational out(0);
  for (const auto& [deg, component] : homogeneous_components(p)) {
    if (deg % 2 != 0) continue;
    const Rational gauss = gaussian_integral(component);
    if (gauss.is_zero()) continue;
    out += pow(s.a2, static_cast<unsigned long>(deg / 2)) / degree_factor(deg, s.dimension) * gauss;
  }
  return out;
}

inline Rational sphere_inner(const Polynomial& p, const Polynomial& q, const SphereSpec& s) {
  return sphere_integral(p * q, s);
}

/// Pairing descriptor used for Gram-matrix assembly and orthogonal families.
class Pairing {
 public:
  enum class Kind { gaussian, hermite, sphere };

  static Pairing gaussian() { return Pairing(Kind::gaussian, {}); }
  static Pairing hermite() { return Pairing(Kind::hermite, {}); }
  static Pairing sphere(SphereSpec s) { return Pairing(Kind::sphere, std::move(s)); }

  Kind kind() const { return kind_; }
  const SphereSpec& spec() const {
    if (!spec_) throw std::logic_error("pairing has no sphere spec");
    return *spec_;
  }

  Rational operator()(const Polynomial& p, const Polynomial& q) const {
    switch (kind_) {
      case Kind::gaussian: return gaussian_inner(p, q);
      case Kind::hermite: return hermite_inner(p, q);
      case Kind::sphere: return sphere_inner(p, q, *spec_);
    }
    throw std::logic_error("unreachable");
  }

 private:
  Pairing(Kind kind, std::optional<SphereSpec> spec) : kind_(kind), spec_(std::move(spec)) {}
  Kind kind_;
  std::optional<SphereSpec> spec_;
};

/// Gram matrix of a basis under a pairing.  Entries are exact; assembly order
/// is immaterial, so entries may be computed independently.
struct GramMatrix {
  std::vector<Polynomial> basis;
  Matrix entries;
};

inline GramMatrix gram_matrix(std::vector<Polynomial> basis, const Pairing& pairing) {
  const std::size_t n = basis.size();
  GramMatrix g{std::move(basis), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g.entries.at(i, j) = pairing(g.basis[i], g.basis[j]);
      if (j != i) g.entries.at(j, i) = g.entries.at(i, j);
    }
  }
  return g;
}

/// Coefficient vector obtained from an exact linear solve against a Gram
/// matrix; the payload of every orthogonal-projection computation here.
struct GramSolveResult {
  std::vector<Rational> coefficients;
};

/// Solves G c = rhs where G is the Gram matrix of `basis` under `pairing`
/// and rhs_i = <basis_i, target>; c gives the orthogonal projection of
/// target onto span(basis).
inline GramSolveResult gram_solve(const std::vector<Polynomial>& basis, const Polynomial& target,
                                  const Pairing& pairing) {
  const GramMatrix g = gram_matrix(basis, pairing);
  std::vector<Rational> rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = pairing(basis[i], target);
  auto c = solve_exact(g.entries, rhs);
  if (!c) throw SingularMatrixError("gram_solve: singular Gram matrix");
  return GramSolveResult{std::move(*c)};
}

}  // namespace spherepoly
