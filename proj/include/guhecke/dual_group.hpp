#pragma once

// Matrix-level model of the dual group GL_n x G_m with its Galois twist and
// the representation r. Used to evaluate det(t - p^(n-1) r(g (sigma.g)))
// directly, independently of the Laurent-polynomial product form.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "guhecke/qmatrix.hpp"
#include "guhecke/rational.hpp"

namespace guhecke {

struct DualGroupElement {
  QMatrix a;
  Rational lambda;
};

inline DualGroupElement operator*(const DualGroupElement& g, const DualGroupElement& h) {
  return {g.a * h.a, g.lambda * h.lambda};
}

/// J' = ((-1)^(i-1) delta_{i, n+1-j}).
inline QMatrix twist_matrix(std::size_t n) {
  QMatrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = (i % 2 == 0) ? 1 : -1;
  return j;
}

/// (A, lambda) -> (J' tA^{-1} J', det(A) lambda).
inline DualGroupElement sigma_action(const DualGroupElement& g) {
  const QMatrix j = twist_matrix(g.a.rows());
  return {j * inverse(g.a.transpose()) * j, determinant(g.a) * g.lambda};
}

/// r(A, lambda) = lambda det(A) tA^{-1}.
inline QMatrix representation_r(const DualGroupElement& g) {
  return (g.lambda * determinant(g.a)) * inverse(g.a.transpose());
}

/// The torus point (diag(x1..xn), x0) from x = (x0, x1, ..., xn).
inline DualGroupElement torus_point(std::span<const Rational> x) {
  if (x.size() < 2) throw std::invalid_argument("torus point needs x0 and at least one x_i");
  std::vector<Rational> diag(x.begin() + 1, x.end());
  return {QMatrix::diagonal(diag), x[0]};
}

/// det(t*I - p^(n-1) r(g (sigma.g))) at g = torus_point(x).
inline Rational hecke_determinant(std::span<const Rational> x, long p, const Rational& t) {
  const DualGroupElement g = torus_point(x);
  const std::size_t n = g.a.rows();
  const QMatrix image = representation_r(g * sigma_action(g));
  const Rational scale = pow(Rational(p), static_cast<std::int64_t>(n) - 1);
  return determinant(t * QMatrix::identity(n) - scale * image);
}

}  // namespace guhecke
