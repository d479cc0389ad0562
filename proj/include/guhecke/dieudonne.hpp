#pragma once

// Unitary Dieudonne modules and spaces with an O_E-grading M = M_e + M_ebar.
//
// Basis order is always (M_e basis, M_ebar basis). F and V swap the two
// pieces. Matrices act on coordinates after the semilinear twist:
// F(x) = F_mat * frob(x), V(x) = V_mat * frob(x), where over F_{p^2} the
// inverse Frobenius equals the Frobenius.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "guhecke/fp2.hpp"
#include "guhecke/qmatrix.hpp"

namespace guhecke {

/// A unitary Dieudonne space over F_{p^2}.
class DieudonneSpace {
 public:
  DieudonneSpace(std::int64_t p, std::size_t ne, std::size_t nebar, Fp2Matrix f_e2ebar,
                 Fp2Matrix f_ebar2e, Fp2Matrix v_e2ebar, Fp2Matrix v_ebar2e, Fp2Matrix gram)
      : p_(p),
        ne_(ne),
        nebar_(nebar),
        f_e2ebar_(std::move(f_e2ebar)),
        f_ebar2e_(std::move(f_ebar2e)),
        v_e2ebar_(std::move(v_e2ebar)),
        v_ebar2e_(std::move(v_ebar2e)),
        gram_(std::move(gram)) {
    if (!is_odd_prime(p_)) throw std::invalid_argument("p must be an odd prime");
    auto shape = [&](const Fp2Matrix& m, std::size_t r, std::size_t c, const char* name) {
      if (m.rows() != r || m.cols() != c || m.p() != p_) {
        throw std::invalid_argument(std::string("malformed grading: ") + name + " has shape " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
      }
    };
    shape(f_e2ebar_, nebar_, ne_, "F_e2ebar");
    shape(f_ebar2e_, ne_, nebar_, "F_ebar2e");
    shape(v_e2ebar_, nebar_, ne_, "V_e2ebar");
    shape(v_ebar2e_, ne_, nebar_, "V_ebar2e");
    shape(gram_, ne_, nebar_, "gram");
  }

  std::int64_t p() const { return p_; }
  std::size_t ne() const { return ne_; }
  std::size_t nebar() const { return nebar_; }
  std::size_t dim() const { return ne_ + nebar_; }
  const Fp2Matrix& f_e2ebar() const { return f_e2ebar_; }
  const Fp2Matrix& f_ebar2e() const { return f_ebar2e_; }
  const Fp2Matrix& v_e2ebar() const { return v_e2ebar_; }
  const Fp2Matrix& v_ebar2e() const { return v_ebar2e_; }
  /// <b_i, b'_j> for b_i in M_e, b'_j in M_ebar.
  const Fp2Matrix& gram() const { return gram_; }

  /// Matrix of F on the whole space.
  Fp2Matrix f_matrix() const { return assemble(f_e2ebar_, f_ebar2e_); }
  Fp2Matrix v_matrix() const { return assemble(v_e2ebar_, v_ebar2e_); }

  /// The alternating form on the whole space: [[0, G], [-G^T, 0]].
  Fp2Matrix pairing_matrix() const {
    Fp2Matrix omega(p_, dim(), dim());
    omega.set_block(0, ne_, gram_);
    omega.set_block(ne_, 0, -gram_.transpose());
    return omega;
  }

  friend bool operator==(const DieudonneSpace&, const DieudonneSpace&) = default;

 private:
  Fp2Matrix assemble(const Fp2Matrix& e2ebar, const Fp2Matrix& ebar2e) const {
    Fp2Matrix full(p_, dim(), dim());
    full.set_block(ne_, 0, e2ebar);
    full.set_block(0, ne_, ebar2e);
    return full;
  }

  std::int64_t p_;
  std::size_t ne_;
  std::size_t nebar_;
  Fp2Matrix f_e2ebar_;
  Fp2Matrix f_ebar2e_;
  Fp2Matrix v_e2ebar_;
  Fp2Matrix v_ebar2e_;
  Fp2Matrix gram_;
};

/// An integral model: F, V with integer entries (hence Frobenius-fixed) on
/// W^(ne+nebar), FV = VF = p.
struct DieudonneModuleZ {
  std::int64_t p = 3;
  std::size_t ne = 0;
  std::size_t nebar = 0;
  QMatrix f;     // (ne+nebar) square
  QMatrix v;     // (ne+nebar) square
  QMatrix gram;  // ne x nebar

  std::size_t dim() const { return ne + nebar; }
};

/// Checks F V = V F = p and that gram is unimodular.
inline bool is_well_formed(const DieudonneModuleZ& m) {
  const QMatrix pid = Rational(static_cast<long>(m.p)) * QMatrix::identity(m.dim());
  if (m.f.rows() != m.dim() || m.v.rows() != m.dim() || !m.f.is_square() || !m.v.is_square()) return false;
  if (m.f * m.v != pid || m.v * m.f != pid) return false;
  if (m.gram.rows() != m.ne || m.gram.cols() != m.nebar || m.ne != m.nebar) return false;
  const Rational det = determinant(m.gram);
  return det == 1 || det == -1;
}

/// SS: basis (g, h), F(g) = h = -V(g), F(h) = -p g, V(h) = p g, <g, h> = 1.
inline DieudonneModuleZ make_ss(std::int64_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  DieudonneModuleZ m{p, 1, 1, QMatrix(2, 2), QMatrix(2, 2), QMatrix(1, 1)};
  const Rational rp(static_cast<long>(p));
  m.f(1, 0) = 1;
  m.f(0, 1) = -rp;
  m.v(1, 0) = -1;
  m.v(0, 1) = rp;
  m.gram(0, 0) = 1;
  return m;
}

/// B(d) on e_1..e_d, f_1..f_d:
///   F(f_1) = (-1)^d e_d, F(e_i) = f_{i-1} (i >= 2),
///   V(f_d) = e_1,        V(e_i) = f_{i+1} (i <= d-1),
/// completed by FV = VF = p:
///   F(e_1) = p f_d, F(f_j) = p e_{j-1} (j >= 2),
///   V(f_j) = p e_{j+1} (j <= d-1), V(e_d) = (-1)^d p f_1,
/// with <e_i, f_j> = (-1)^(i-1) delta_ij.
inline DieudonneModuleZ make_b(int d, std::int64_t p) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  const auto ud = static_cast<std::size_t>(d);
  DieudonneModuleZ m{p, ud, ud, QMatrix(2 * ud, 2 * ud), QMatrix(2 * ud, 2 * ud), QMatrix(ud, ud)};
  auto e = [](std::size_t i) { return i - 1; };
  auto f = [ud](std::size_t j) { return ud + j - 1; };
  const Rational rp(static_cast<long>(p));
  const Rational sign = (d % 2 == 0) ? 1 : -1;

  m.f(e(ud), f(1)) = sign;
  for (std::size_t i = 2; i <= ud; ++i) m.f(f(i - 1), e(i)) = 1;
  m.f(f(ud), e(1)) = rp;
  for (std::size_t j = 2; j <= ud; ++j) m.f(e(j - 1), f(j)) = rp;

  m.v(e(1), f(ud)) = 1;
  for (std::size_t i = 1; i + 1 <= ud; ++i) m.v(f(i + 1), e(i)) = 1;
  for (std::size_t j = 1; j + 1 <= ud; ++j) m.v(e(j + 1), f(j)) = rp;
  m.v(f(1), e(ud)) = sign * rp;

  for (std::size_t i = 1; i <= ud; ++i) m.gram(i - 1, i - 1) = (i % 2 == 1) ? 1 : -1;
  return m;
}

inline Fp2 reduce_mod_p(const Rational& x, std::int64_t p) {
  if (!is_integral(x)) throw std::invalid_argument("integral model has a non-integer entry");
  const Integer r = x.get_num() % Integer(static_cast<long>(p));
  return Fp2(p, r.get_si());
}

/// M / pM as a Dieudonne space. Throws if F or V does not swap the grading.
inline DieudonneSpace reduction(const DieudonneModuleZ& m) {
  const std::int64_t p = m.p;
  auto block = [&](const QMatrix& src, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    Fp2Matrix out(p, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = reduce_mod_p(src(r0 + i, c0 + j), p);
    }
    return out;
  };
  for (const QMatrix* op : {&m.f, &m.v}) {
    if (op->rows() != m.dim() || op->cols() != m.dim()) throw std::invalid_argument("malformed grading");
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if ((i < m.ne) == (j < m.ne) && (*op)(i, j) != 0) {
          throw std::invalid_argument("malformed grading: F or V preserves a graded piece");
        }
      }
    }
  }
  return DieudonneSpace(p, m.ne, m.nebar, block(m.f, m.ne, 0, m.nebar, m.ne), block(m.f, 0, m.ne, m.ne, m.nebar),
                        block(m.v, m.ne, 0, m.nebar, m.ne), block(m.v, 0, m.ne, m.ne, m.nebar),
                        block(m.gram, 0, 0, m.ne, m.nebar));
}

/// (dim M_e / V M_ebar, dim M_ebar / V M_e).
inline std::pair<std::size_t, std::size_t> signature(const DieudonneSpace& m) {
  return {m.ne() - rank(m.v_ebar2e()), m.nebar() - rank(m.v_e2ebar())};
}

/// Im F = Ker V, Im V = Ker F, and <Fx, y> = <x, Vy>^p on basis vectors.
inline bool check_bt1(const DieudonneSpace& m) {
  const Fp2Matrix f = m.f_matrix();
  const Fp2Matrix v = m.v_matrix();
  // Ker of x -> A frob(x) is the Frobenius image of the nullspace of A.
  const Subspace im_f = Subspace::column_span(f);
  const Subspace im_v = Subspace::column_span(v);
  const Subspace ker_f = Subspace::column_span(nullspace(f)).frobenius();
  const Subspace ker_v = Subspace::column_span(nullspace(v)).frobenius();
  if (!(im_f == ker_v) || !(im_v == ker_f)) return false;
  const Fp2Matrix omega = m.pairing_matrix();
  return f.transpose() * omega == (omega * v).frobenius();
}

/// The gram matrix is square and invertible.
inline bool is_nondegenerate(const DieudonneSpace& m) {
  return m.ne() == m.nebar() && rank(m.gram()) == m.ne();
}

inline DieudonneSpace direct_sum(const DieudonneSpace& a, const DieudonneSpace& b) {
  if (a.p() != b.p()) throw std::invalid_argument("direct sum of spaces over different primes");
  return DieudonneSpace(a.p(), a.ne() + b.ne(), a.nebar() + b.nebar(), block_diagonal(a.f_e2ebar(), b.f_e2ebar()),
                        block_diagonal(a.f_ebar2e(), b.f_ebar2e()), block_diagonal(a.v_e2ebar(), b.v_e2ebar()),
                        block_diagonal(a.v_ebar2e(), b.v_ebar2e()), block_diagonal(a.gram(), b.gram()));
}

/// B(r)/p + (SS/p)^(n-r), the Ekedahl-Oort model of type r in rank n.
inline DieudonneSpace model_space(int n, int r, std::int64_t p) {
  if (r < 1 || r > n) throw std::invalid_argument("type r must lie in 1..n");
  DieudonneSpace out = reduction(make_b(r, p));
  const DieudonneSpace ss = reduction(make_ss(p));
  for (int i = r; i < n; ++i) out = direct_sum(out, ss);
  return out;
}

/// Rewrites M in the basis whose vectors are the columns of p_e (on M_e) and
/// p_ebar (on M_ebar). Both must be invertible.
inline DieudonneSpace apply_basechange(const DieudonneSpace& m, const Fp2Matrix& p_e, const Fp2Matrix& p_ebar) {
  const Fp2Matrix pfull = block_diagonal(p_e, p_ebar);
  const Fp2Matrix pinv = inverse(pfull);
  const Fp2Matrix pfrob = pfull.frobenius();
  const Fp2Matrix f = pinv * m.f_matrix() * pfrob;
  const Fp2Matrix v = pinv * m.v_matrix() * pfrob;
  const Fp2Matrix gram = p_e.transpose() * m.gram() * p_ebar;
  const std::size_t ne = m.ne();
  const std::size_t nb = m.nebar();
  return DieudonneSpace(m.p(), ne, nb, f.block(ne, 0, nb, ne), f.block(0, ne, ne, nb), v.block(ne, 0, nb, ne),
                        v.block(0, ne, ne, nb), gram);
}

/// A uniformly random invertible n x n matrix over F_{p^2}.
inline Fp2Matrix random_invertible(std::int64_t p, std::size_t n, std::mt19937_64& rng) {
  const auto up = static_cast<std::uint64_t>(p);
  for (;;) {
    Fp2Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto a = static_cast<std::int64_t>(rng() % up);
        const auto b = static_cast<std::int64_t>(rng() % up);
        m(i, j) = Fp2(p, a, b);
      }
    }
    if (rank(m) == n) return m;
  }
}

/// M in a random grading-preserving basis; deterministic in the seed.
inline DieudonneSpace random_basechange(const DieudonneSpace& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Fp2Matrix p_e = random_invertible(m.p(), m.ne(), rng);
  const Fp2Matrix p_ebar = random_invertible(m.p(), m.nebar(), rng);
  return apply_basechange(m, p_e, p_ebar);
}

}  // namespace guhecke
