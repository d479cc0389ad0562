#pragma once

// Polynomials in t with Laurent-polynomial coefficients.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "guhecke/laurent.hpp"

namespace guhecke {

class TPoly {
 public:
  explicit TPoly(std::size_t n) : n_(n) {}
  /// coeffs[k] is the coefficient of t^k. Trailing zero coefficients are trimmed.
  TPoly(std::size_t n, std::vector<LaurentPoly> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_n(n_, c.n());
    trim();
  }

  /// t - root.
  static TPoly linear(const LaurentPoly& root) {
    return TPoly(root.n(), {-root, LaurentPoly::constant(root.n(), 1)});
  }

  std::size_t n() const { return n_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  const LaurentPoly& leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  LaurentPoly coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : LaurentPoly(n_);
  }
  bool is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == LaurentPoly::constant(n_, 1);
  }

  friend TPoly operator+(const TPoly& a, const TPoly& b) {
    require_same_n(a.n_, b.n_);
    std::vector<LaurentPoly> out(std::max(a.coeffs_.size(), b.coeffs_.size()), LaurentPoly(a.n_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
    return TPoly(a.n_, std::move(out));
  }
  friend TPoly operator-(const TPoly& a, const TPoly& b) {
    require_same_n(a.n_, b.n_);
    std::vector<LaurentPoly> out(std::max(a.coeffs_.size(), b.coeffs_.size()), LaurentPoly(a.n_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
    return TPoly(a.n_, std::move(out));
  }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    require_same_n(a.n_, b.n_);
    if (a.is_zero() || b.is_zero()) return TPoly(a.n_);
    std::vector<LaurentPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1, LaurentPoly(a.n_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TPoly(a.n_, std::move(out));
  }

  friend bool operator==(const TPoly&, const TPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::size_t n_;
  std::vector<LaurentPoly> coeffs_;
};

/// Raised by divide_exact when the divisor does not divide the dividend.
class NonZeroRemainder : public std::runtime_error {
 public:
  explicit NonZeroRemainder(TPoly remainder)
      : std::runtime_error("division left a nonzero remainder"), remainder_(std::move(remainder)) {}
  const TPoly& remainder() const { return remainder_; }

 private:
  TPoly remainder_;
};

struct TDivision {
  TPoly quotient;
  TPoly remainder;
};

/// Long division by a divisor whose leading coefficient is a unit (a single
/// term c*m). Always succeeds; the remainder has degree < deg(divisor).
inline TDivision divide(const TPoly& dividend, const TPoly& divisor) {
  require_same_n(dividend.n(), divisor.n());
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (!divisor.leading().is_monomial()) {
    throw std::invalid_argument("divisor's leading coefficient is not a unit monomial");
  }
  const std::size_t n = dividend.n();
  const LaurentPoly lead_inv = invert_unit(divisor.leading());
  const long dd = divisor.degree();

  std::vector<LaurentPoly> rem = dividend.coeffs();
  const long qdeg = dividend.degree() - dd;
  std::vector<LaurentPoly> quot(qdeg >= 0 ? static_cast<std::size_t>(qdeg + 1) : 0, LaurentPoly(n));
  for (long k = dividend.degree(); k >= dd; --k) {
    const auto uk = static_cast<std::size_t>(k);
    if (rem[uk].is_zero()) continue;
    LaurentPoly factor = rem[uk] * lead_inv;
    const auto shift = static_cast<std::size_t>(k - dd);
    for (long j = 0; j <= dd; ++j) {
      rem[shift + static_cast<std::size_t>(j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
    quot[shift] = std::move(factor);
  }
  return {TPoly(n, std::move(quot)), TPoly(n, std::move(rem))};
}

/// Quotient of an exact division; throws NonZeroRemainder otherwise.
inline TPoly divide_exact(const TPoly& dividend, const TPoly& divisor) {
  auto [quotient, remainder] = divide(dividend, divisor);
  if (!remainder.is_zero()) throw NonZeroRemainder(std::move(remainder));
  return quotient;
}

inline Rational evaluate(const TPoly& p, const Rational& t, const Rational& q,
                         std::span<const Rational> x) {
  Rational acc{0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * t + evaluate(*it, q, x);
  }
  return acc;
}

/// "t^2 + (x1)*t + (1)" style rendering, highest degree first.
inline std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c == LaurentPoly::constant(p.n(), 1);
    if (k == 0) {
      out += "(" + to_string(c) + ")";
    } else {
      if (!unit) out += "(" + to_string(c) + ")*";
      out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace guhecke
