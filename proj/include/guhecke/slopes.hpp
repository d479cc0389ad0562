#pragma once

// Newton slopes of integral Dieudonne modules, isocrystal shapes in
// signature (n-1, 1), and the Ekedahl-Oort strata dimension table.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "guhecke/dieudonne.hpp"
#include "guhecke/qmatrix.hpp"
#include "guhecke/rational.hpp"

namespace guhecke {

struct SlopePart {
  Rational slope;
  long mult = 0;
  friend bool operator==(const SlopePart&, const SlopePart&) = default;
};

/// Slopes with multiplicities, sorted ascending with equal slopes merged.
class SlopeMultiset {
 public:
  SlopeMultiset() = default;
  explicit SlopeMultiset(std::vector<SlopePart> parts) {
    for (auto& part : parts) add(part.slope, part.mult);
  }

  void add(const Rational& slope, long mult) {
    if (mult <= 0) throw std::invalid_argument("slope multiplicity must be positive");
    auto it = std::lower_bound(parts_.begin(), parts_.end(), slope,
                               [](const SlopePart& p, const Rational& s) { return p.slope < s; });
    if (it != parts_.end() && it->slope == slope) {
      it->mult += mult;
    } else {
      parts_.insert(it, SlopePart{slope, mult});
    }
  }

  const std::vector<SlopePart>& parts() const { return parts_; }
  long total() const {
    long t = 0;
    for (const auto& p : parts_) t += p.mult;
    return t;
  }
  /// Fixed by s -> 1 - s.
  bool is_symmetric() const {
    SlopeMultiset mirrored;
    for (const auto& p : parts_) mirrored.add(Rational{1} - p.slope, p.mult);
    return mirrored == *this;
  }
  bool is_supersingular() const { return parts_.size() == 1 && parts_[0].slope == Rational(1, 2); }

  /// Drops every occurrence of the given slope.
  SlopeMultiset without(const Rational& slope) const {
    SlopeMultiset out;
    for (const auto& p : parts_) {
      if (p.slope != slope) out.add(p.slope, p.mult);
    }
    return out;
  }

  friend bool operator==(const SlopeMultiset&, const SlopeMultiset&) = default;

 private:
  std::vector<SlopePart> parts_;
};

/// "{1/4 x4, 3/4 x4}".
inline std::string to_string(const SlopeMultiset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i != 0) out += ", ";
    out += s.parts()[i].slope.get_str() + " x" + std::to_string(s.parts()[i].mult);
  }
  return out + "}";
}

/// Valuations of the roots of sum c[i] t^i, read off the lower convex hull
/// of the points (i, v_p(c[i])). The constant term must be nonzero.
inline SlopeMultiset newton_polygon(const std::vector<Integer>& coeffs, long p) {
  if (coeffs.empty() || coeffs.back() == 0) throw std::invalid_argument("polynomial must have a nonzero leading coefficient");
  if (coeffs.front() == 0) throw std::domain_error("zero constant term: a root of infinite valuation");
  std::vector<std::pair<long, long>> points;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) points.emplace_back(static_cast<long>(i), valuation(coeffs[i], p));
  }
  SlopeMultiset out;
  std::size_t cur = 0;
  while (cur + 1 < points.size()) {
    // Steepest descent from the current vertex; ties go to the farthest point.
    std::size_t best = cur + 1;
    for (std::size_t j = cur + 2; j < points.size(); ++j) {
      const auto [xb, yb] = points[best];
      const auto [xj, yj] = points[j];
      const auto [xc, yc] = points[cur];
      // (yj - yc)/(xj - xc) <= (yb - yc)/(xb - xc)
      if ((yj - yc) * (xb - xc) <= (yb - yc) * (xj - xc)) best = j;
    }
    const long run = points[best].first - points[cur].first;
    const long drop = points[cur].second - points[best].second;
    out.add(Rational(drop) / Rational(run), run);
    cur = best;
  }
  return out;
}

/// Newton slopes of x -> A frob(x) for a Frobenius-fixed (integer) matrix A:
/// the Newton polygon of det(t - A). Rejects non-integer entries.
inline SlopeMultiset newton_slopes(const QMatrix& f, long p) {
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!is_integral(f(i, j))) throw std::invalid_argument("F has a non-integer entry");
    }
  }
  const auto charpoly = characteristic_polynomial(f);
  std::vector<Integer> coeffs;
  for (const auto& c : charpoly) coeffs.push_back(c.get_num());
  return newton_polygon(coeffs, p);
}

inline SlopeMultiset newton_slopes(const DieudonneModuleZ& m) { return newton_slopes(m.f, static_cast<long>(m.p)); }

struct SimpleIsocrystal {
  Rational slope;
  long dim = 0;     // denominator of the slope in lowest terms
  long copies = 0;
};

struct IsocrystalShape {
  int n = 0;
  int r = 0;
  SlopeMultiset slopes;
  std::vector<SimpleIsocrystal> factors;
};

inline void require_odd_positive(long n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be a positive odd integer");
}

inline SimpleIsocrystal simple_isocrystal(const Rational& slope, long copies) {
  return {slope, slope.get_den().get_si(), copies};
}

/// N(r) x (N_{1/2})^(n-2r): N(r) = 0 for r = 0, N_{1/2-1/2r} + N_{1/2+1/2r}
/// for r even, and the square of that for r odd.
inline IsocrystalShape isocrystal_shape(int n, int r) {
  require_odd_positive(n);
  if (r < 0 || r > (n - 1) / 2) {
    throw std::invalid_argument("r must lie in 0..(n-1)/2, got " + std::to_string(r));
  }
  IsocrystalShape shape{n, r, {}, {}};
  const Rational half(1, 2);
  if (r > 0) {
    const Rational offset = Rational(1) / Rational(2 * r);
    const long copies = (r % 2 == 0) ? 1 : 2;
    shape.factors.push_back(simple_isocrystal(half - offset, copies));
    shape.factors.push_back(simple_isocrystal(half + offset, copies));
  }
  if (n - 2 * r > 0) shape.factors.push_back(simple_isocrystal(half, n - 2 * r));
  for (const auto& f : shape.factors) shape.slopes.add(f.slope, f.dim * f.copies);
  return shape;
}

struct StratumRow {
  int r = 0;
  int dim = 0;
  bool ordinary = false;       // the open (mu-ordinary) stratum
  bool supersingular = false;
  SlopeMultiset newton;        // slopes of the isocrystal on the stratum
};

/// dim M_{2i} = n - i, dim M_{2i+1} = i, for r = 1..n.
inline std::vector<StratumRow> strata_dims(int n) {
  require_odd_positive(n);
  std::vector<StratumRow> rows;
  for (int r = 1; r <= n; ++r) {
    StratumRow row;
    row.r = r;
    row.dim = (r % 2 == 0) ? n - r / 2 : (r - 1) / 2;
    row.ordinary = r == 2;
    row.supersingular = r % 2 == 1;
    row.newton = isocrystal_shape(n, row.supersingular ? 0 : r / 2).slopes;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace guhecke
