#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spherepoly/orthogonal.hpp"
#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"
#include "spherepoly/sphere_laplacian.hpp"

namespace spherepoly {

enum class LimitKind { inner_product, projected_monomial, zonal_to_hermite, slap_to_hermite };

/// One convergence table: exact max-coefficient (or absolute-value) errors of
/// the finite-N object, computed with a^2 = N, against its Gaussian/Hermite
/// limit.  Errors stay rational so rates can be verified symbolically.
struct LimitTable {
  LimitKind kind;
  std::string target;
  std::vector<std::pair<int, Rational>> rows;  // (N, error), N strictly increasing
};

namespace detail {

inline Rational max_coefficient_gap(const Polynomial& a, const Polynomial& b) {
  Rational out(0);
  const Polynomial diff = a - b;
  for (const auto& [m, c] : diff.terms()) out = std::max(out, abs(c));
  return out;
}

inline void check_n_list(const std::vector<int>& n_list, int min_exclusive) {
  if (n_list.empty()) throw std::invalid_argument("limit_table: empty N list");
  int prev = min_exclusive;
  for (int n : n_list) {
    if (n <= prev) throw std::invalid_argument("limit_table: N list must be increasing and exceed the payload's variable count");
    prev = n;
  }
}

}  // namespace detail

/// |<p,q> on S^{N-1}(sqrt N)  -  Gaussian <p,q>| per N.
inline LimitTable limit_table_inner(const Polynomial& p, const Polynomial& q,
                                    const std::vector<int>& n_list) {
  detail::check_n_list(n_list, static_cast<int>(std::max(p.max_variable(), q.max_variable())));
  LimitTable table{LimitKind::inner_product, "gaussian inner product", {}};
  const Rational limit = gaussian_inner(p, q);
  for (int n : n_list) {
    const Rational finite = sphere_inner(p, q, SphereSpec(n, Rational(long(n))));
    table.rows.emplace_back(n, abs(finite - limit));
  }
  return table;
}

/// Spherical projection complement of a monomial against its Hermite-product
/// limit (I - Pi) p.
inline LimitTable limit_table_projected(const Polynomial& p, const std::vector<int>& n_list) {
  const int k = static_cast<int>(p.max_variable());
  const int d = std::max(p.degree(), 0);
  detail::check_n_list(n_list, k);
  LimitTable table{LimitKind::projected_monomial, "gaussian projection complement", {}};
  const Polynomial limit = gauss_projection_complement(p, d);
  for (int n : n_list) {
    const Polynomial finite =
        sphere_projection_complement(p, std::max(k, 1), d, SphereSpec(n, Rational(long(n))));
    table.rows.emplace_back(n, detail::max_coefficient_gap(finite, limit));
  }
  return table;
}

/// Zonal polynomial q_m(sqrt N; X) against the Hermite polynomial H_m.
inline LimitTable limit_table_zonal(int m, const std::vector<int>& n_list) {
  detail::check_n_list(n_list, 1);
  LimitTable table{LimitKind::zonal_to_hermite, "H_" + std::to_string(m), {}};
  const Polynomial limit = hermite_poly(m);
  for (int n : n_list) {
    const Polynomial finite = zonal_poly(m, SphereSpec(n, Rational(long(n))));
    table.rows.emplace_back(n, detail::max_coefficient_gap(finite, limit));
  }
  return table;
}

/// Spherical Laplacian on S^{N-1}(sqrt N) against the Hermite operator.
inline LimitTable limit_table_slap(const Polynomial& p, const std::vector<int>& n_list) {
  detail::check_n_list(n_list, static_cast<int>(p.max_variable()));
  LimitTable table{LimitKind::slap_to_hermite, "hermite operator", {}};
  for (int n : n_list) table.rows.emplace_back(n, slap_limit_error(p, AmbientDim(n)));
  return table;
}

}  // namespace spherepoly
