#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "guhecke/json_io.hpp"
#include "guhecke/laurent.hpp"
#include "test_util.hpp"

using namespace guhecke;

namespace {

constexpr std::size_t kN = 3;

LaurentPoly x(std::size_t i) { return LaurentPoly::x(kN, i); }
LaurentPoly q() { return LaurentPoly::q(kN); }
LaurentPoly c(long v) { return LaurentPoly::constant(kN, v); }

}  // namespace

TEST(LaurentPoly, AdditiveInverseCancels) {
  const LaurentPoly sum = x(1) + (-x(1));
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(sum.size(), 0U);
}

TEST(LaurentPoly, AddCollectsLikeTerms) {
  EXPECT_EQ(q() * x(1) + q() * x(1), c(2) * q() * x(1));
  EXPECT_EQ((x(1) * x(2) + x(3)) + x(3), x(1) * x(2) + c(2) * x(3));
}

TEST(LaurentPoly, MultiplyAddsExponents) {
  const LaurentPoly inv(inverse(Monomial::x(kN, 1)));
  EXPECT_EQ(x(1) * inv, c(1));

  const LaurentPoly lhs(Monomial(2, {2, 0, 0, 0}));
  const LaurentPoly rhs(Monomial(0, {0, 1, 1, 1}));
  EXPECT_EQ(lhs * rhs, LaurentPoly(Monomial(2, {2, 1, 1, 1})));

  const LaurentPoly s = x(1) + x(2);
  EXPECT_EQ(s * s, x(1) * x(1) + c(2) * x(1) * x(2) + x(2) * x(2));
}

TEST(LaurentPoly, DimensionMismatchThrows) {
  EXPECT_THROW(LaurentPoly::x(3, 1) + LaurentPoly::x(5, 1), std::invalid_argument);
  EXPECT_THROW(LaurentPoly::x(3, 1) * LaurentPoly::x(5, 1), std::invalid_argument);
}

TEST(LaurentPoly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = test::random_laurent(rng, kN);
    const auto b = test::random_laurent(rng, kN);
    const auto d = test::random_laurent(rng, kN);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_TRUE((a - a).is_zero());
    for (const auto* p : {&a, &b, &d}) {
      const auto prod = *p * a + b;
      for (const auto& [m, coeff] : prod.terms()) EXPECT_NE(coeff, 0);
    }
  }
}

TEST(LaurentPoly, SubstituteSwapsVariables) {
  auto images = identity_images(kN);
  images[2].mono = Monomial::x(kN, 3);  // x1 -> x3
  images[4].mono = Monomial::x(kN, 1);  // x3 -> x1
  const LaurentPoly ratio(Monomial(0, {0, 1, 0, -1}));
  EXPECT_EQ(substitute(ratio, images), LaurentPoly(Monomial(0, {0, -1, 0, 1})));
}

TEST(LaurentPoly, IdentitySubstitutionIsTrivial) {
  std::mt19937_64 rng(7);
  const auto p = test::random_laurent(rng, kN);
  EXPECT_EQ(substitute(p, identity_images(kN)), p);
}

TEST(LaurentPoly, SubstituteSigmaImageOfX0) {
  // x_i -> x_{n+1-i}^{-1}, x0 -> x0*x1*...*xn applied to x0.
  auto images = identity_images(kN);
  images[1].mono = Monomial(0, {1, 1, 1, 1});
  for (std::size_t i = 1; i <= kN; ++i) images[i + 1].mono = Monomial::x(kN, kN + 1 - i, -1);
  EXPECT_EQ(substitute(x(0), images), LaurentPoly(Monomial(0, {1, 1, 1, 1})));
}

TEST(LaurentPoly, SubstituteTracksSigns) {
  auto images = identity_images(kN);
  images[2].sign = -1;  // x1 -> -x1
  const LaurentPoly p = x(1) * x(1) * x(1) + x(1) * x(1) + x(2);
  EXPECT_EQ(substitute(p, images), -(x(1) * x(1) * x(1)) + x(1) * x(1) + x(2));
}

TEST(LaurentPoly, CanonicalText) {
  const LaurentPoly p(Monomial(2, {2, 1, 0, -1}), make_rational(3, 2));
  EXPECT_EQ(to_string(p), "3/2*q^2*x0^2*x1*x3^-1");
  EXPECT_EQ(to_string(LaurentPoly(kN)), "0");
  EXPECT_EQ(to_string(c(1) - x(1)), "1 - x1");
  EXPECT_EQ(to_string(-x(2)), "-x2");
}

TEST(LaurentPoly, JsonTermSchema) {
  const LaurentPoly p(Monomial(2, {2, 1, 0, -1}), make_rational(3, 2));
  EXPECT_EQ(json_io::to_json(p).dump(), R"([{"coeff":"3/2","q":2,"x":[2,1,0,-1]}])");
}

TEST(LaurentPoly, JsonRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = test::random_laurent(rng, kN);
    EXPECT_EQ(json_io::laurent_from_json(json_io::to_json(p), kN), p);
  }
}

TEST(LaurentPoly, EvaluateHandlesNegativeExponents) {
  const LaurentPoly p(Monomial(1, {0, 2, 0, -1}), 3);
  const std::vector<Rational> pt{1, 2, 5, 4};
  EXPECT_EQ(evaluate(p, Rational(7), pt), Rational(21));  // 3 * 7 * 4 / 4
}
