#include <gtest/gtest.h>

#include "guhecke/dieudonne.hpp"
#include "guhecke/json_io.hpp"
#include "guhecke/slopes.hpp"

using namespace guhecke;

namespace {

SlopeMultiset slopes(std::initializer_list<std::pair<Rational, long>> parts) {
  SlopeMultiset s;
  for (const auto& [slope, mult] : parts) s.add(slope, mult);
  return s;
}

}  // namespace

TEST(Newton, PolygonFromCoefficients) {
  // t^2 - (p+1) t + p: slopes 0 and 1.
  EXPECT_EQ(newton_polygon({Integer(3), Integer(-4), Integer(1)}, 3), slopes({{0, 1}, {1, 1}}));
  // t^3 - p^2: one segment of slope 2/3.
  EXPECT_EQ(newton_polygon({Integer(-25), Integer(0), Integer(0), Integer(1)}, 5), slopes({{Rational(2, 3), 3}}));
  // t^2 - p: supersingular.
  EXPECT_TRUE(newton_polygon({Integer(-7), Integer(0), Integer(1)}, 7).is_supersingular());
}

TEST(Newton, ModelSlopes) {
  EXPECT_EQ(newton_slopes(make_ss(3)), slopes({{Rational(1, 2), 2}}));
  EXPECT_EQ(newton_slopes(make_b(4, 5)), slopes({{Rational(1, 4), 4}, {Rational(3, 4), 4}}));
  EXPECT_EQ(newton_slopes(make_b(5, 3)), slopes({{Rational(1, 2), 10}}));
  EXPECT_EQ(to_string(newton_slopes(make_b(4, 5))), "{1/4 x4, 3/4 x4}");
  EXPECT_EQ(json_io::to_json(newton_slopes(make_b(2, 3))).dump(),
            R"([{"slope":"0","mult":2},{"slope":"1","mult":2}])");
}

TEST(Newton, AgreesWithIsocrystalShape) {
  for (std::int64_t p : {3, 5, 7}) {
    for (int d = 2; d <= 8; d += 2) {
      const auto from_matrix = newton_slopes(make_b(d, p));
      const auto expected = isocrystal_shape(d + 1, d / 2).slopes.without(Rational(1, 2));
      EXPECT_EQ(from_matrix, expected) << "d=" << d << " p=" << p;
      EXPECT_TRUE(from_matrix.is_symmetric());
    }
  }
}

TEST(Newton, RejectsNonIntegralInput) {
  QMatrix f = QMatrix::identity(2);
  f(0, 1) = make_rational(1, 2);
  EXPECT_THROW(newton_slopes(f, 3), std::invalid_argument);
}

TEST(Isocrystal, Shapes) {
  const auto s50 = isocrystal_shape(5, 0);
  EXPECT_EQ(s50.slopes, slopes({{Rational(1, 2), 10}}));
  const auto s52 = isocrystal_shape(5, 2);
  EXPECT_EQ(s52.slopes, slopes({{Rational(1, 4), 4}, {Rational(1, 2), 2}, {Rational(3, 4), 4}}));
  ASSERT_EQ(s52.factors.size(), 3U);
  EXPECT_EQ(s52.factors[0].dim, 4);
  EXPECT_EQ(s52.factors[0].copies, 1);
  const auto s73 = isocrystal_shape(7, 3);
  EXPECT_EQ(s73.slopes, slopes({{Rational(1, 3), 6}, {Rational(1, 2), 2}, {Rational(2, 3), 6}}));
  EXPECT_EQ(s73.factors[0].copies, 2);
  for (int n = 1; n <= 21; n += 2) {
    for (int r = 0; r <= (n - 1) / 2; ++r) {
      const auto s = isocrystal_shape(n, r);
      EXPECT_EQ(s.slopes.total(), 2 * n);
      EXPECT_TRUE(s.slopes.is_symmetric());
    }
  }
}

TEST(Isocrystal, RangeErrors) {
  EXPECT_THROW(isocrystal_shape(5, 3), std::invalid_argument);
  EXPECT_THROW(isocrystal_shape(5, -1), std::invalid_argument);
  EXPECT_THROW(isocrystal_shape(4, 1), std::invalid_argument);
}

TEST(Strata, NEquals5) {
  const auto rows = strata_dims(5);
  ASSERT_EQ(rows.size(), 5U);
  const std::vector<int> dims{0, 4, 1, 3, 2};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].r, static_cast<int>(i) + 1);
    EXPECT_EQ(rows[i].dim, dims[i]);
    EXPECT_EQ(rows[i].supersingular, rows[i].r % 2 == 1);
    EXPECT_EQ(rows[i].ordinary, rows[i].r == 2);
  }
  EXPECT_EQ(rows[3].newton, slopes({{Rational(1, 4), 4}, {Rational(1, 2), 2}, {Rational(3, 4), 4}}));
  EXPECT_TRUE(rows[4].newton.is_supersingular());
}

TEST(Strata, DimensionsAreAPermutation) {
  for (int n = 1; n <= 31; n += 2) {
    std::vector<int> dims;
    for (const auto& row : strata_dims(n)) dims.push_back(row.dim);
    std::sort(dims.begin(), dims.end());
    for (int i = 0; i < n; ++i) EXPECT_EQ(dims[static_cast<std::size_t>(i)], i);
  }
}
