#pragma once

// Torus-level combinatorics of GU(n-1,1) at an inert prime, n odd:
// the Weyl group of the diagonal torus, rho, the character/cocharacter
// pairing and the Galois twist on the dual torus.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "guhecke/laurent.hpp"
#include "guhecke/rational.hpp"

namespace guhecke {

/// Throws unless n is an odd integer >= 3.
inline void require_odd_rank(long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and ≥ 3");
}

/// A permutation w of {1..n} with w(i) + w(n+1-i) = n+1 for all i.
///
/// The pairing i <-> n+1-i is the one preserved by the torus equations
/// conj(x1)*xn = conj(x2)*x(n-1) = ...; summing the condition over i forces
/// the constant n+1.
class WeylElement {
 public:
  /// perm[i-1] = w(i). Throws if perm is not a permutation or breaks the pairing.
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = size();
    std::vector<bool> seen(perm_.size() + 1, false);
    for (int v : perm_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("not a permutation of {1..n}");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (int i = 1; i <= n; ++i) {
      if ((*this)(i) + (*this)(n + 1 - i) != n + 1) {
        throw std::invalid_argument("permutation does not preserve the pairing i <-> n+1-i");
      }
    }
  }

  static WeylElement identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return WeylElement(std::move(p));
  }

  int size() const { return static_cast<int>(perm_.size()); }
  int operator()(int i) const { return perm_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const { return perm_; }

  /// (a * b)(i) = a(b(i)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Weyl elements of different rank");
    std::vector<int> p(a.perm_.size());
    for (int i = 1; i <= a.size(); ++i) p[static_cast<std::size_t>(i - 1)] = a(b(i));
    return WeylElement(std::move(p));
  }

  WeylElement inverse() const {
    std::vector<int> p(perm_.size());
    for (int i = 1; i <= size(); ++i) p[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return WeylElement(std::move(p));
  }

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
};

/// One-line notation, e.g. "[3,2,1]".
inline std::string to_string(const WeylElement& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.one_line().size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(w.one_line()[i]);
  }
  return out + "]";
}

/// All of Omega(T), sorted lexicographically by one-line notation.
/// Size 2^m * m! with m = (n-1)/2.
inline std::vector<WeylElement> weyl_group(int n) {
  require_odd_rank(n);
  const int m = (n - 1) / 2;
  // A pairing-preserving permutation is a signed permutation of the m pairs
  // {i, n+1-i}; the middle index is fixed.
  std::vector<int> pair_perm(static_cast<std::size_t>(m));
  std::iota(pair_perm.begin(), pair_perm.end(), 1);
  std::vector<WeylElement> out;
  do {
    for (unsigned flips = 0; flips < (1U << m); ++flips) {
      std::vector<int> p(static_cast<std::size_t>(n));
      p[static_cast<std::size_t>(m)] = m + 1;
      for (int i = 1; i <= m; ++i) {
        int target = pair_perm[static_cast<std::size_t>(i - 1)];
        if ((flips >> (i - 1)) & 1U) target = n + 1 - target;
        p[static_cast<std::size_t>(i - 1)] = target;
        p[static_cast<std::size_t>(n - i)] = n + 1 - target;
      }
      out.emplace_back(std::move(p));
    }
  } while (std::next_permutation(pair_perm.begin(), pair_perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// 2^m * m! with m = (n-1)/2.
inline std::uint64_t weyl_group_order(int n) {
  require_odd_rank(n);
  std::uint64_t order = 1;
  for (int i = 1; i <= (n - 1) / 2; ++i) order *= static_cast<std::uint64_t>(2 * i);
  return order;
}

/// Generators of Omega(T): the swaps of adjacent pairs {i, n+1-i} and
/// {i+1, n-i}, and the flip 1 <-> n.
inline std::vector<WeylElement> weyl_generators(int n) {
  require_odd_rank(n);
  const int m = (n - 1) / 2;
  std::vector<WeylElement> gens;
  auto base = [n] {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
  };
  for (int i = 1; i < m; ++i) {
    auto p = base();
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    std::swap(p[static_cast<std::size_t>(n - i)], p[static_cast<std::size_t>(n - i - 1)]);
    gens.emplace_back(std::move(p));
  }
  auto flip = base();
  std::swap(flip.front(), flip.back());
  gens.emplace_back(std::move(flip));
  return gens;
}

/// Integral (co)character: coords[0] is the chi_0 / mu_0 coefficient,
/// coords[i] the chi_i / mu_i coefficient.
struct Weight {
  std::vector<std::int64_t> coords;

  static Weight basis(std::size_t n, std::size_t i) {
    Weight w{std::vector<std::int64_t>(n + 1, 0)};
    w.coords.at(i) = 1;
    return w;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Rational weight with 2*coords integral.
struct HalfWeight {
  std::vector<Rational> coords;
};

/// Half-sum of the positive roots chi_i - chi_j (i < j) of the GL_n factor.
inline HalfWeight rho(int n) {
  require_odd_rank(n);
  HalfWeight r{std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational{0})};
  for (int i = 1; i <= n; ++i) r.coords[static_cast<std::size_t>(i)] = make_rational(n + 1 - 2 * i, 2);
  return r;
}

/// <chi, nu> under chi_i <-> mu_i.
inline Rational pairing(const HalfWeight& chi, const Weight& nu) {
  if (chi.coords.size() != nu.coords.size()) throw std::invalid_argument("pairing length mismatch");
  Rational total{0};
  for (std::size_t i = 0; i < chi.coords.size(); ++i) {
    total += chi.coords[i] * Rational(static_cast<long>(nu.coords[i]));
  }
  return total;
}

/// The x-exponent vector of a monomial read as a cocharacter.
inline Weight as_weight(const Monomial& m) { return Weight{m.x_exps}; }

inline Monomial as_monomial(const Weight& w) { return Monomial(0, w.coords); }

/// Restriction of sigma to the dual torus:
/// x_i -> x_{n+1-i}^{-1} (1 <= i <= n), x0 -> x0*x1*...*xn, q -> q.
inline Monomial sigma_twist(const Monomial& m) {
  const std::size_t n = m.n();
  Monomial out(n);
  out.q_exp = m.q_exp;
  const auto e0 = m.x_exps[0];
  out.x_exps[0] = e0;
  for (std::size_t j = 1; j <= n; ++j) out.x_exps[j] = e0 - m.x_exps[n + 1 - j];
  return out;
}

inline std::vector<SignedMonomial> sigma_images(std::size_t n) {
  auto images = identity_images(n);
  for (std::size_t i = 0; i <= n; ++i) images[i + 1].mono = sigma_twist(Monomial::x(n, i));
  return images;
}

inline LaurentPoly sigma_twist(const LaurentPoly& p) { return substitute(p, sigma_images(p.n())); }

/// m * sigma(m): the character m evaluated on g * (sigma . g).
inline Monomial norm_monomial(const Monomial& m) { return m * sigma_twist(m); }

/// Permutes x1..xn by x_i -> x_{w(i)}; fixes x0 and q.
inline LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& p) {
  const std::size_t n = p.n();
  if (static_cast<std::size_t>(w.size()) != n) throw std::invalid_argument("Weyl element rank mismatch");
  auto images = identity_images(n);
  for (std::size_t i = 1; i <= n; ++i) {
    images[i + 1].mono = Monomial::x(n, static_cast<std::size_t>(w(static_cast<int>(i))));
  }
  return substitute(p, images);
}

}  // namespace guhecke
