#include <gtest/gtest.h>

#include <set>

#include "guhecke/classify.hpp"
#include "guhecke/dieudonne.hpp"
#include "guhecke/json_io.hpp"

using namespace guhecke;

namespace {

DieudonneSpace ss_power(int k, std::int64_t p) {
  DieudonneSpace out = reduction(make_ss(p));
  for (int i = 1; i < k; ++i) out = direct_sum(out, reduction(make_ss(p)));
  return out;
}

bool pairing_law(const DieudonneSpace& m) {
  const Fp2Matrix omega = m.pairing_matrix();
  return m.f_matrix().transpose() * omega == (omega * m.v_matrix()).frobenius();
}

}  // namespace

TEST(Dieudonne, IntegralModelsAreWellFormed) {
  for (std::int64_t p : {3, 5, 7}) {
    EXPECT_TRUE(is_well_formed(make_ss(p)));
    for (int d = 1; d <= 9; ++d) EXPECT_TRUE(is_well_formed(make_b(d, p))) << "d=" << d;
  }
  EXPECT_THROW(make_b(0, 3), std::invalid_argument);
  EXPECT_THROW(make_ss(9), std::invalid_argument);
}

TEST(Dieudonne, Signatures) {
  for (std::int64_t p : {3, 5, 7}) {
    EXPECT_EQ(signature(reduction(make_ss(p))), (std::pair<std::size_t, std::size_t>{1, 0}));
    for (int d = 1; d <= 9; ++d) {
      EXPECT_EQ(signature(reduction(make_b(d, p))),
                (std::pair<std::size_t, std::size_t>{static_cast<std::size_t>(d - 1), 1}));
    }
  }
}

TEST(Dieudonne, ModelsAreBT1) {
  for (std::int64_t p : {3, 5, 7}) {
    EXPECT_TRUE(check_bt1(reduction(make_ss(p))));
    for (int d = 1; d <= 9; ++d) {
      const auto m = reduction(make_b(d, p));
      EXPECT_TRUE(check_bt1(m)) << "d=" << d;
      EXPECT_TRUE(pairing_law(m));
      EXPECT_TRUE(is_nondegenerate(m));
    }
  }
}

TEST(Dieudonne, ZeroOperatorsAreNotBT1) {
  const std::int64_t p = 3;
  const DieudonneSpace zero(p, 1, 1, Fp2Matrix(p, 1, 1), Fp2Matrix(p, 1, 1), Fp2Matrix(p, 1, 1),
                            Fp2Matrix(p, 1, 1), Fp2Matrix::identity(p, 1));
  EXPECT_FALSE(check_bt1(zero));
}

TEST(Dieudonne, MalformedGradingThrows) {
  const std::int64_t p = 3;
  EXPECT_THROW(DieudonneSpace(p, 2, 1, Fp2Matrix(p, 2, 1), Fp2Matrix(p, 2, 1), Fp2Matrix(p, 1, 2),
                              Fp2Matrix(p, 2, 1), Fp2Matrix(p, 2, 1)),
               std::invalid_argument);
  DieudonneModuleZ bad = make_ss(p);
  bad.f(0, 0) = 1;
  EXPECT_THROW(reduction(bad), std::invalid_argument);
}

TEST(Dieudonne, DirectSum) {
  const auto a = reduction(make_b(3, 5));
  const auto b = reduction(make_ss(5));
  const auto s = direct_sum(a, b);
  EXPECT_EQ(s.dim(), a.dim() + b.dim());
  EXPECT_EQ(signature(s), (std::pair<std::size_t, std::size_t>{3, 1}));
  EXPECT_TRUE(check_bt1(s));
  EXPECT_THROW(direct_sum(a, reduction(make_ss(3))), std::invalid_argument);
}

TEST(Dieudonne, BaseChange) {
  const auto m = model_space(5, 3, 5);
  EXPECT_EQ(apply_basechange(m, Fp2Matrix::identity(5, m.ne()), Fp2Matrix::identity(5, m.nebar())), m);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_basechange(m, seed);
    EXPECT_EQ(signature(c), signature(m));
    EXPECT_TRUE(check_bt1(c));
    EXPECT_TRUE(pairing_law(c));
    EXPECT_EQ(rank(c.gram()), m.ne());
  }
  EXPECT_EQ(random_basechange(m, 9), random_basechange(m, 9));
}

TEST(Classify, FingerprintsSeparateModels) {
  for (std::int64_t p : {3, 5}) {
    for (int n = 1; n <= 9; ++n) {
      const auto fps = model_fingerprints(n, p);
      EXPECT_EQ(std::set<Fingerprint>(fps.begin(), fps.end()).size(), static_cast<std::size_t>(n)) << "n=" << n;
    }
  }
}

TEST(Classify, FiltrationOfSupersingularLine) {
  // Filtration 0 < <e1> < M.
  const auto filt = canonical_filtration(model_space(1, 1, 3));
  EXPECT_EQ(filt.size(), 3U);
  EXPECT_EQ(fingerprint(model_space(1, 1, 3)),
            (Fingerprint{{0, 0, 0}, {1, 0, 1}, {2, 1, 1}}));
}

TEST(Classify, RecoversTypeAfterBaseChange) {
  for (int n = 1; n <= 7; ++n) {
    const auto models = model_fingerprints(n, 3);
    for (int r = 1; r <= n; ++r) {
      const auto m = model_space(n, r, 3);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ASSERT_EQ(classify_type(random_basechange(m, 1000 * n + 10 * r + seed), n, models), r)
            << "n=" << n << " r=" << r << " seed=" << seed;
      }
    }
  }
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify_type(ss_power(5, 3), 5), NotBT1);
  EXPECT_THROW(classify_type(model_space(5, 2, 3), 7), NotBT1);
  EXPECT_THROW(classify_type(model_space(3, 2, 3), 3, {}), NoMatch);
  const std::int64_t p = 3;
  const DieudonneSpace zero(p, 1, 1, Fp2Matrix(p, 1, 1), Fp2Matrix(p, 1, 1), Fp2Matrix(p, 1, 1),
                            Fp2Matrix(p, 1, 1), Fp2Matrix::identity(p, 1));
  EXPECT_THROW(classify_type(zero, 1), NotBT1);
}

TEST(DieudonneJson, RoundTrip) {
  for (int r = 1; r <= 5; ++r) {
    const auto m = random_basechange(model_space(5, r, 7), static_cast<std::uint64_t>(r));
    EXPECT_EQ(json_io::dieudonne_space_from_json(json_io::to_json(m)), m);
  }
}

TEST(DieudonneJson, MalformedInput) {
  auto j = json_io::to_json(model_space(3, 2, 3));
  auto wrong_c = j;
  wrong_c["nonresidue"] = 5;
  EXPECT_ANY_THROW(json_io::dieudonne_space_from_json(wrong_c));
  auto short_rows = j;
  short_rows["gram"] = json_io::json::array();
  EXPECT_ANY_THROW(json_io::dieudonne_space_from_json(short_rows));
  auto missing = j;
  missing.erase("F_e2ebar");
  EXPECT_ANY_THROW(json_io::dieudonne_space_from_json(missing));
}
