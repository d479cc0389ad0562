#pragma once

// Sparse Laurent polynomials in q, x0, x1, ..., xn over the rationals.
//
// q stands for the prime p as a formal central variable; x0 is the similitude
// coordinate of the dual torus and x1..xn the diagonal GL_n coordinates.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "guhecke/rational.hpp"

namespace guhecke {

/// q^q_exp * x0^x_exps[0] * ... * xn^x_exps[n]. Ordered lexicographically
/// on (q_exp, x_exps).
struct Monomial {
  std::int64_t q_exp = 0;
  std::vector<std::int64_t> x_exps;

  Monomial() = default;
  explicit Monomial(std::size_t n) : x_exps(n + 1, 0) {}
  Monomial(std::int64_t q, std::vector<std::int64_t> x) : q_exp(q), x_exps(std::move(x)) {
    if (x_exps.empty()) throw std::invalid_argument("monomial needs at least the x0 slot");
  }

  /// Number of GL_n variables (x_exps has n+1 slots).
  std::size_t n() const { return x_exps.size() - 1; }
  bool is_one() const {
    if (q_exp != 0) return false;
    for (auto e : x_exps) {
      if (e != 0) return false;
    }
    return true;
  }

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial x(std::size_t n, std::size_t i, std::int64_t e = 1) {
    Monomial m(n);
    m.x_exps.at(i) = e;
    return m;
  }
  static Monomial q(std::size_t n, std::int64_t e = 1) {
    Monomial m(n);
    m.q_exp = e;
    return m;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline void require_same_n(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: n=" + std::to_string(a) +
                                " vs n=" + std::to_string(b));
  }
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_n(a.n(), b.n());
  Monomial out = a;
  out.q_exp += b.q_exp;
  for (std::size_t i = 0; i < out.x_exps.size(); ++i) out.x_exps[i] += b.x_exps[i];
  return out;
}

inline Monomial inverse(const Monomial& m) {
  Monomial out = m;
  out.q_exp = -out.q_exp;
  for (auto& e : out.x_exps) e = -e;
  return out;
}

inline Monomial pow(const Monomial& m, std::int64_t e) {
  Monomial out = m;
  out.q_exp *= e;
  for (auto& x : out.x_exps) x *= e;
  return out;
}

/// Renders without coefficient, e.g. "q^2*x0^2*x1*x3^-1"; "1" for the unit.
inline std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto factor = [&](const std::string& name, std::int64_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << name;
    if (e != 1) os << '^' << e;
  };
  factor("q", m.q_exp);
  for (std::size_t i = 0; i < m.x_exps.size(); ++i) factor("x" + std::to_string(i), m.x_exps[i]);
  if (first) return "1";
  return os.str();
}

/// Image of one variable under a monomial substitution: sign * mono.
struct SignedMonomial {
  int sign = 1;
  Monomial mono;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit LaurentPoly(std::size_t n) : n_(n) {}
  LaurentPoly(const Monomial& m, Rational coeff = 1) : n_(m.n()) { add_term(m, coeff); }

  static LaurentPoly constant(std::size_t n, const Rational& c) {
    return LaurentPoly(Monomial::one(n), c);
  }
  static LaurentPoly x(std::size_t n, std::size_t i) { return LaurentPoly(Monomial::x(n, i)); }
  static LaurentPoly q(std::size_t n) { return LaurentPoly(Monomial::q(n)); }

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational{0} : it->second;
  }

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c) {
    require_same_n(n_, m.n());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    require_same_n(n_, other.n_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    require_same_n(n_, other.n_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_n(a.n_, b.n_);
    LaurentPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// The multiplicative inverse of a single-term polynomial.
inline LaurentPoly invert_unit(const LaurentPoly& u) {
  if (!u.is_monomial()) throw std::domain_error("only single-term Laurent polynomials are units");
  const auto& [m, c] = *u.terms().begin();
  return LaurentPoly(inverse(m), Rational{1} / c);
}

/// Replaces q, x0, ..., xn (images[0], images[1], ..., images[n+1]) by the
/// given signed monomials.
inline LaurentPoly substitute(const LaurentPoly& p, std::span<const SignedMonomial> images) {
  if (images.size() != p.n() + 2) {
    throw std::invalid_argument("substitution needs n+2 images, got " +
                                std::to_string(images.size()));
  }
  for (const auto& img : images) {
    require_same_n(p.n(), img.mono.n());
    if (img.sign != 1 && img.sign != -1) throw std::invalid_argument("image sign must be +-1");
  }
  LaurentPoly out(p.n());
  for (const auto& [m, c] : p.terms()) {
    Monomial image = pow(images[0].mono, m.q_exp);
    int sign = (images[0].sign < 0 && (m.q_exp % 2 != 0)) ? -1 : 1;
    for (std::size_t i = 0; i < m.x_exps.size(); ++i) {
      const auto& img = images[i + 1];
      image = image * pow(img.mono, m.x_exps[i]);
      if (img.sign < 0 && (m.x_exps[i] % 2 != 0)) sign = -sign;
    }
    out.add_term(image, sign * c);
  }
  return out;
}

/// The identity substitution (q, x0, ..., xn mapped to themselves).
inline std::vector<SignedMonomial> identity_images(std::size_t n) {
  std::vector<SignedMonomial> images;
  images.push_back({1, Monomial::q(n)});
  for (std::size_t i = 0; i <= n; ++i) images.push_back({1, Monomial::x(n, i)});
  return images;
}

/// Value at q and x = (x0, ..., xn). Variables appearing with a negative
/// exponent must be nonzero.
inline Rational evaluate(const LaurentPoly& p, const Rational& q, std::span<const Rational> x) {
  if (x.size() != p.n() + 1) throw std::invalid_argument("evaluation point has wrong length");
  Rational total{0};
  for (const auto& [m, c] : p.terms()) {
    Rational term = c * pow(q, m.q_exp);
    for (std::size_t i = 0; i < m.x_exps.size(); ++i) term *= pow(x[i], m.x_exps[i]);
    total += term;
  }
  return total;
}

/// Canonical text: terms in monomial order, e.g. "3/2*q^2*x0^2*x1*x3^-1 - x1".
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << to_string(m);
    } else {
      os << mag.get_str() << '*' << to_string(m);
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace guhecke
