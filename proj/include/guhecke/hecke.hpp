#pragma once

// The Hecke polynomial of GU(n-1,1) at an inert prime on the dual-torus side,
// its certified factorization through the central element, and the Satake
// renormalization alpha.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "guhecke/laurent.hpp"
#include "guhecke/root_datum.hpp"
#include "guhecke/tpoly.hpp"

namespace guhecke {

/// Weights of r = (lambda det) (x) dual of the standard representation:
/// chi_0 + sum_{j != i} chi_j for i = 1..n. The last one is mu-hat.
inline std::vector<Weight> r_weights(int n) {
  require_odd_rank(n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Weight> out;
  for (std::size_t i = 1; i <= un; ++i) {
    Weight w{std::vector<std::int64_t>(un + 1, 1)};
    w.coords[i] = 0;
    out.push_back(std::move(w));
  }
  return out;
}

/// x0^2 * x1 * ... * xn, the character (A, x) -> det(A) x^2 matching 1_{pK_p}.
inline Monomial central_monomial(int n) {
  require_odd_rank(n);
  Monomial m(static_cast<std::size_t>(n));
  m.x_exps.assign(m.x_exps.size(), 1);
  m.x_exps[0] = 2;
  return m;
}

/// The n eigenvalues of p^(n-1) r(g (sigma.g)) on the dual torus, in the
/// order of r_weights: q^(n-1) x0^2 (x1...xn) x_{n+1-i}/x_i.
inline std::vector<Monomial> hecke_roots(int n) {
  std::vector<Monomial> roots;
  for (const auto& w : r_weights(n)) {
    roots.push_back(Monomial::q(static_cast<std::size_t>(n), n - 1) * norm_monomial(as_monomial(w)));
  }
  return roots;
}

/// H_p(t) = prod_i (t - root_i), expanded; monic of degree n.
inline TPoly hecke_polynomial(int n) {
  const auto un = static_cast<std::size_t>(n);
  TPoly h(un, {LaurentPoly::constant(un, 1)});
  for (const auto& root : hecke_roots(n)) h = h * TPoly::linear(LaurentPoly(root));
  return h;
}

inline bool check_weyl_invariance(const LaurentPoly& p, std::span<const WeylElement> group) {
  for (const auto& w : group) {
    if (weyl_act(w, p) != p) return false;
  }
  return true;
}

/// True iff every element of Omega(T) fixes p.
inline bool check_weyl_invariance(const LaurentPoly& p, int n) {
  require_same_n(p.n(), static_cast<std::size_t>(n));
  const auto group = weyl_group(n);
  return check_weyl_invariance(p, group);
}

/// True iff applying the torus-level sigma to every variable fixes p.
inline bool check_sigma_invariance(const LaurentPoly& p) { return sigma_twist(p) == p; }

struct HeckeFactorization {
  TPoly hecke;
  TPoly residual;           // R(t), degree n-1
  LaurentPoly linear_root;  // q^(n-1) * central_monomial(n)
  bool weyl_invariant;      // every coefficient of H_p and R
  bool sigma_invariant;     // every coefficient of H_p and R
};

/// Divides H_p by (t - q^(n-1) e). Propagates NonZeroRemainder if the
/// division is not exact.
///
/// Weyl invariance is checked against the full group up to n = 9 and
/// against weyl_generators(n) beyond, where |Omega(T)| reaches 645120.
inline HeckeFactorization factor_hecke(int n) {
  const auto un = static_cast<std::size_t>(n);
  TPoly hecke = hecke_polynomial(n);
  LaurentPoly root(Monomial::q(un, n - 1) * central_monomial(n));
  TPoly residual = divide_exact(hecke, TPoly::linear(root));

  const auto group = n <= 9 ? weyl_group(n) : weyl_generators(n);
  bool weyl = true;
  bool sigma = true;
  for (const TPoly* poly : {&hecke, &residual}) {
    for (const auto& c : poly->coeffs()) {
      weyl = weyl && check_weyl_invariance(c, group);
      sigma = sigma && check_sigma_invariance(c);
    }
  }
  return {std::move(hecke), std::move(residual), std::move(root), weyl, sigma};
}

/// nu -> q^(-2<rho, nu>) nu on every monomial, reading x-exponents as a
/// cocharacter.
inline LaurentPoly satake_alpha(const LaurentPoly& p, int n) {
  require_same_n(p.n(), static_cast<std::size_t>(n));
  const HalfWeight r = rho(n);
  LaurentPoly out(p.n());
  for (const auto& [m, c] : p.terms()) {
    const Rational shift = 2 * pairing(r, as_weight(m));
    if (!is_integral(shift)) throw std::domain_error("2<rho, nu> is not integral");
    Monomial image = m;
    image.q_exp -= shift.get_num().get_si();
    out.add_term(image, c);
  }
  return out;
}

}  // namespace guhecke
