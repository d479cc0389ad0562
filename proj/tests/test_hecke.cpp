#include <gtest/gtest.h>

#include <random>

#include "guhecke/dual_group.hpp"
#include "guhecke/hecke.hpp"
#include "guhecke/json_io.hpp"

using namespace guhecke;

namespace {

LaurentPoly mono(std::int64_t q, std::vector<std::int64_t> x, long c = 1) {
  return LaurentPoly(Monomial(q, std::move(x)), c);
}

}  // namespace

TEST(Hecke, RWeights) {
  const auto w = r_weights(3);
  ASSERT_EQ(w.size(), 3U);
  EXPECT_EQ(w[0].coords, (std::vector<std::int64_t>{1, 0, 1, 1}));
  EXPECT_EQ(w[1].coords, (std::vector<std::int64_t>{1, 1, 0, 1}));
  EXPECT_EQ(w.back().coords, (std::vector<std::int64_t>{1, 1, 1, 0}));
}

TEST(Hecke, RootsForNEquals3) {
  // q^2 x0^2 x1 x2 x3 * (x3/x1, 1, x1/x3)
  const auto roots = hecke_roots(3);
  ASSERT_EQ(roots.size(), 3U);
  EXPECT_EQ(roots[0], Monomial(2, {2, 0, 1, 2}));
  EXPECT_EQ(roots[1], Monomial(2, {2, 1, 1, 1}));
  EXPECT_EQ(roots[2], Monomial(2, {2, 2, 1, 0}));
}

TEST(Hecke, PolynomialForNEquals3) {
  const TPoly h = hecke_polynomial(3);
  ASSERT_EQ(h.degree(), 3);
  EXPECT_TRUE(h.is_monic());
  EXPECT_EQ(h.coeff(2), mono(2, {2, 0, 1, 2}, -1) + mono(2, {2, 1, 1, 1}, -1) + mono(2, {2, 2, 1, 0}, -1));
  EXPECT_EQ(h.coeff(1), mono(4, {4, 1, 2, 3}) + mono(4, {4, 2, 2, 2}) + mono(4, {4, 3, 2, 1}));
  EXPECT_EQ(h.coeff(0), mono(6, {6, 3, 3, 3}, -1));
}

TEST(Hecke, ConstantTerm) {
  for (int n : {3, 5, 7, 9}) {
    const auto un = static_cast<std::size_t>(n);
    Monomial e = central_monomial(n);
    const Monomial expected = Monomial::q(un, n * (n - 1)) * pow(e, n);
    EXPECT_EQ(hecke_polynomial(n).coeff(0), LaurentPoly(expected, n % 2 == 0 ? 1 : -1)) << "n=" << n;
  }
}

TEST(Hecke, CentralMonomial) {
  EXPECT_EQ(central_monomial(3), Monomial(0, {2, 1, 1, 1}));
  EXPECT_EQ(central_monomial(5), Monomial(0, {2, 1, 1, 1, 1, 1}));
  EXPECT_THROW(central_monomial(4), std::invalid_argument);
}

TEST(Hecke, FactorizationForNEquals3) {
  const auto f = factor_hecke(3);
  EXPECT_EQ(f.linear_root, mono(2, {2, 1, 1, 1}));
  const TPoly expected = TPoly::linear(mono(2, {2, 0, 1, 2})) * TPoly::linear(mono(2, {2, 2, 1, 0}));
  EXPECT_EQ(f.residual, expected);
  EXPECT_TRUE(f.weyl_invariant);
  EXPECT_TRUE(f.sigma_invariant);
}

TEST(Hecke, FactorizationUpToNine) {
  for (int n : {5, 7, 9}) {
    const auto f = factor_hecke(n);
    EXPECT_EQ(f.residual.degree(), n - 1);
    EXPECT_TRUE(f.residual.is_monic());
    EXPECT_EQ(f.residual * TPoly::linear(f.linear_root), f.hecke);
    EXPECT_TRUE(f.weyl_invariant);
    EXPECT_TRUE(f.sigma_invariant);
  }
}

TEST(Hecke, InvarianceChecks) {
  EXPECT_FALSE(check_weyl_invariance(LaurentPoly::x(5, 1), 5));
  EXPECT_TRUE(check_weyl_invariance(LaurentPoly::constant(5, 7), 5));
  EXPECT_TRUE(check_weyl_invariance(LaurentPoly::x(5, 0), 5));
  EXPECT_TRUE(check_weyl_invariance(LaurentPoly::x(5, 3), 5));
  EXPECT_TRUE(check_weyl_invariance(LaurentPoly(central_monomial(5)), 5));
  EXPECT_FALSE(check_sigma_invariance(LaurentPoly::x(3, 1)));
  EXPECT_TRUE(check_sigma_invariance(LaurentPoly::x(3, 1) + LaurentPoly(Monomial::x(3, 3, -1))));
  EXPECT_TRUE(check_sigma_invariance(LaurentPoly(central_monomial(3))));
}

TEST(Hecke, SatakeAlpha) {
  // <rho, mu_1> = 1 for n = 3, so x1 -> q^-2 x1; x3 -> q^2 x3; x0, x2 fixed.
  EXPECT_EQ(satake_alpha(LaurentPoly::x(3, 1), 3), mono(-2, {0, 1, 0, 0}));
  EXPECT_EQ(satake_alpha(LaurentPoly::x(3, 3), 3), mono(2, {0, 0, 0, 1}));
  EXPECT_EQ(satake_alpha(LaurentPoly::x(3, 0), 3), LaurentPoly::x(3, 0));
  EXPECT_EQ(satake_alpha(LaurentPoly::x(3, 2), 3), LaurentPoly::x(3, 2));
  // Central element: <rho, (2;1,...,1)> = 0.
  for (int n : {3, 5, 7}) {
    const LaurentPoly e(central_monomial(n));
    EXPECT_EQ(satake_alpha(e, n), e);
  }
}

TEST(Hecke, SatakeAlphaIsMultiplicative) {
  const LaurentPoly a = LaurentPoly::x(5, 1) + LaurentPoly(Monomial(1, {1, 0, 2, 0, -1, 0}));
  const LaurentPoly b = LaurentPoly::x(5, 5) + LaurentPoly::constant(5, 3);
  EXPECT_EQ(satake_alpha(a * b, 5), satake_alpha(a, 5) * satake_alpha(b, 5));
  EXPECT_EQ(satake_alpha(a + b, 5), satake_alpha(a, 5) + satake_alpha(b, 5));
}

TEST(Hecke, DeterminantCrossCheck) {
  // Three routes to H_p at a rational point: expanded polynomial, the explicit
  // dual-group determinant, and the product of the eigenvalues written by hand.
  std::mt19937_64 rng(31337);
  auto draw = [&rng] {
    long num = static_cast<long>(rng() % 21) - 10;
    if (num == 0) num = 1;
    return make_rational(num, static_cast<long>(rng() % 5) + 1);
  };
  for (int n : {3, 5}) {
    const TPoly h = hecke_polynomial(n);
    for (long p : {3L, 5L}) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> x;
        for (int i = 0; i <= n; ++i) x.push_back(draw());
        const Rational t = draw();

        Rational d = 1;
        for (int i = 1; i <= n; ++i) d *= x[static_cast<std::size_t>(i)];
        Rational product = 1;
        for (int i = 1; i <= n; ++i) {
          Rational root = pow(Rational(p), n - 1) * x[0] * x[0] * d * x[static_cast<std::size_t>(n + 1 - i)] /
                          x[static_cast<std::size_t>(i)];
          product *= t - root;
        }
        EXPECT_EQ(evaluate(h, t, Rational(p), x), product);
        EXPECT_EQ(hecke_determinant(x, p, t), product);
      }
    }
  }
}

TEST(Hecke, JsonReport) {
  const auto j = json_io::to_json(3, factor_hecke(3));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["remainder_zero"], true);
  EXPECT_EQ(j["weyl_invariant"], true);
  EXPECT_EQ(j["sigma_invariant"], true);
  EXPECT_EQ(j["linear_root"].dump(), R"({"coeff":"1","q":2,"x":[2,1,1,1]})");
  EXPECT_EQ(j["Hp"].size(), 4U);
  EXPECT_EQ(j["R"].size(), 3U);
}
