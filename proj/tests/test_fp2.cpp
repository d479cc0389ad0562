#include <gtest/gtest.h>

#include <random>

#include "guhecke/fp2.hpp"

using namespace guhecke;

TEST(Fp2, LeastNonresidue) {
  EXPECT_EQ(least_nonresidue(3), 2);
  EXPECT_EQ(least_nonresidue(5), 2);
  EXPECT_EQ(least_nonresidue(7), 3);
  EXPECT_EQ(least_nonresidue(17), 3);
  EXPECT_EQ(least_nonresidue(41), 3);
  EXPECT_EQ(least_nonresidue(71), 7);
  EXPECT_THROW(least_nonresidue(9), std::invalid_argument);
}

TEST(Fp2, FieldAxioms) {
  for (std::int64_t p : {3, 5, 7, 11}) {
    std::vector<Fp2> all;
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < p; ++b) all.emplace_back(p, a, b);
    }
    for (const auto& x : all) {
      if (!x.is_zero()) {
        EXPECT_EQ(x * x.inverse(), x.one());
      }
      // Frobenius is x -> x^p: compare with repeated multiplication.
      Fp2 power = x.one();
      for (std::int64_t k = 0; k < p; ++k) power *= x;
      EXPECT_EQ(x.frobenius(), power);
      EXPECT_EQ(x.frobenius().frobenius(), x);
    }
    const Fp2 u(p, 0, 1);
    EXPECT_EQ(u * u, Fp2(p, least_nonresidue(p)));
  }
}

TEST(Fp2, NoOverflowNearLimit) {
  const std::int64_t p = 2147483629;  // prime below 2^31
  const Fp2 x(p, p - 1, p - 2);
  EXPECT_EQ(x * x.inverse(), x.one());
}

TEST(Fp2Matrix, RankNullspaceInverse) {
  std::mt19937_64 rng(5);
  const std::int64_t p = 5;
  for (int trial = 0; trial < 40; ++trial) {
    Fp2Matrix m(p, 4, 6);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        if (rng() % 3 != 0) m(i, j) = Fp2(p, static_cast<std::int64_t>(rng() % 5), static_cast<std::int64_t>(rng() % 5));
      }
    }
    const Fp2Matrix k = nullspace(m);
    EXPECT_EQ(k.rows(), 6U);
    EXPECT_EQ(rank(m) + k.cols(), 6U);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
  Fp2Matrix a(p, 2, 2);
  a(0, 0) = Fp2(p, 1, 1);
  a(0, 1) = Fp2(p, 2);
  a(1, 1) = Fp2(p, 0, 3);
  EXPECT_EQ(a * inverse(a), Fp2Matrix::identity(p, 2));
  EXPECT_THROW(inverse(Fp2Matrix(p, 2, 2)), std::domain_error);
}

TEST(Subspace, ImagePreimageFrobenius) {
  const std::int64_t p = 3;
  Fp2Matrix proj(p, 3, 3);  // projection onto the first two coordinates
  proj(0, 0) = Fp2(p, 1);
  proj(1, 1) = Fp2(p, 1);
  const Subspace whole = Subspace::whole(p, 3);
  EXPECT_EQ(whole.image(proj).dim(), 2U);
  EXPECT_EQ(Subspace::zero(p, 3).preimage(proj).dim(), 1U);

  Fp2Matrix line(p, 3, 1);
  line(0, 0) = Fp2(p, 1);
  line(1, 0) = Fp2(p, 0, 1);
  const Subspace l = Subspace::column_span(line);
  Fp2Matrix conj(p, 3, 1);
  conj(0, 0) = Fp2(p, 1);
  conj(1, 0) = Fp2(p, 0, 2);
  EXPECT_EQ(l.frobenius(), Subspace::column_span(conj));
  EXPECT_FALSE(l.frobenius() == l);
  EXPECT_EQ(l.preimage(proj).dim(), 2U);
}
