#pragma once

#include <stdexcept>
#include <vector>

#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"

namespace spherepoly {

/// Ambient dimension N for operators whose result genuinely depends on N
/// even when the input uses fewer variables (the Casimir sum runs over all
/// of {1,...,N}).
struct AmbientDim {
  explicit AmbientDim(int n) : value(n) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  }
  int value;
};

/// Rotation generator M_jk = X_j d_k - X_k d_j.
inline Polynomial apply_Mjk(VarIndex j, VarIndex k, const Polynomial& p) {
  if (j < 1 || k < 1) throw std::invalid_argument("apply_Mjk: indices must be >= 1");
  if (j == k) throw std::invalid_argument("apply_Mjk: indices must differ");
  return Polynomial::variable(j) * partial_derivative(k, p) -
         Polynomial::variable(k) * partial_derivative(j, p);
}

/// Quadratic Casimir ||M||^2 = sum of M_jk^2 over 2-element subsets {j,k} of
/// {1,...,N}, applied by the naive double loop.  Pairs that touch none of
/// p's variables contribute nothing and are skipped.
inline Polynomial casimir(const Polynomial& p, AmbientDim ambient) {
  const int N = ambient.value;
  require_within_dimension(p, N, "casimir");
  std::vector<bool> support(static_cast<std::size_t>(N) + 1, false);
  for (const auto& [m, c] : p.terms())
    for (const auto& [var, exp] : m.factors()) support[var] = true;
  Polynomial out;
  for (VarIndex j = 1; static_cast<int>(j) <= N; ++j) {
    for (VarIndex k = j + 1; static_cast<int>(k) <= N; ++k) {
      if (!support[j] && !support[k]) continue;
      const Polynomial once = apply_Mjk(j, k, p);
      if (once.is_zero()) continue;
      out += apply_Mjk(j, k, once);
    }
  }
  return out;
}

/// Euler operator r d_r = sum_j X_j d_j; multiplies each homogeneous
/// component of degree m by m.
inline Polynomial euler(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, c * Rational(long(m.total_degree())));
  return out;
}

/// Euclidean Laplacian Delta_N = d_1^2 + ... + d_N^2.
inline Polynomial laplacian(const Polynomial& p, AmbientDim ambient) {
  require_within_dimension(p, ambient.value, "laplacian");
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [var, exp] : m.factors()) {
      if (exp < 2) continue;
      out.add_term(m.with_exponent(var, exp - 2), c * Rational(long(exp) * (long(exp) - 1)));
    }
  }
  return out;
}

/// Multiplication by ||X||^2 = X_1^2 + ... + X_N^2, the Hermite-pairing
/// adjoint of the Laplacian.
inline Polynomial norm_sq_times(const Polynomial& p, AmbientDim ambient) {
  require_within_dimension(p, ambient.value, "norm_sq_times");
  return norm_sq_poly(ambient.value) * p;
}

}  // namespace spherepoly
