#pragma once

// The quadratic extension F_{p^2} = F_p[u]/(u^2 - c), c the least quadratic
// non-residue mod p, and dense matrices over it.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace guhecke {

inline bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  if (base < 0) base += p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

/// Smallest c in [2, p) with c^((p-1)/2) = -1 mod p.
inline std::int64_t least_nonresidue(std::int64_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  for (std::int64_t c = 2; c < p; ++c) {
    if (mod_pow(c, (p - 1) / 2, p) == p - 1) return c;
  }
  throw std::logic_error("no quadratic non-residue found");
}

/// a + b*u in F_{p^2}. The prime is limited to 31 bits so products fit in 64.
class Fp2 {
 public:
  Fp2() = default;
  Fp2(std::int64_t p, std::int64_t a, std::int64_t b = 0) : p_(p), c_(least_nonresidue(p)) {
    if (p >= (std::int64_t{1} << 31)) throw std::invalid_argument("prime too large");
    a_ = reduce(a);
    b_ = reduce(b);
  }

  std::int64_t p() const { return p_; }
  std::int64_t nonresidue() const { return c_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Fp2 zero() const { return with(0, 0); }
  Fp2 one() const { return with(1, 0); }

  /// x -> x^p. Since u^p = c^((p-1)/2) u = -u this is conjugation.
  Fp2 frobenius() const { return with(a_, p_ - b_); }

  Fp2 inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_{p^2}");
    // (a + bu)^{-1} = (a - bu) / (a^2 - c b^2)
    const std::int64_t norm = reduce(a_ * a_ - reduce(c_ * b_) * b_);
    const std::int64_t inv = mod_pow(norm, p_ - 2, p_);
    return with(a_ * inv, (p_ - b_) * inv);
  }

  friend Fp2 operator+(const Fp2& x, const Fp2& y) {
    check(x, y);
    return x.with(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Fp2 operator-(const Fp2& x, const Fp2& y) {
    check(x, y);
    return x.with(x.a_ - y.a_, x.b_ - y.b_);
  }
  Fp2 operator-() const { return with(-a_, -b_); }
  friend Fp2 operator*(const Fp2& x, const Fp2& y) {
    check(x, y);
    const std::int64_t a = x.reduce(x.a_ * y.a_) + x.reduce(x.reduce(x.b_ * y.b_) * x.c_);
    const std::int64_t b = x.reduce(x.a_ * y.b_) + x.reduce(x.b_ * y.a_);
    return x.with(a, b);
  }
  friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inverse(); }
  Fp2& operator+=(const Fp2& y) { return *this = *this + y; }
  Fp2& operator-=(const Fp2& y) { return *this = *this - y; }
  Fp2& operator*=(const Fp2& y) { return *this = *this * y; }

  friend bool operator==(const Fp2& x, const Fp2& y) {
    return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  std::int64_t reduce(std::int64_t v) const {
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  Fp2 with(std::int64_t a, std::int64_t b) const {
    Fp2 out;
    out.p_ = p_;
    out.c_ = c_;
    out.a_ = reduce(a);
    out.b_ = reduce(b);
    return out;
  }
  static void check(const Fp2& x, const Fp2& y) {
    if (x.p_ != y.p_) throw std::invalid_argument("F_{p^2} elements over different primes");
  }

  std::int64_t p_ = 3;
  std::int64_t c_ = 2;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

/// Dense row-major matrix over F_{p^2}.
class Fp2Matrix {
 public:
  Fp2Matrix() = default;
  Fp2Matrix(std::int64_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, Fp2(p, 0)) {}

  static Fp2Matrix identity(std::int64_t p, std::size_t n) {
    Fp2Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp2(p, 1);
    return m;
  }

  std::int64_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp2& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Fp2& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Fp2Matrix transpose() const {
    Fp2Matrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Entrywise Frobenius.
  Fp2Matrix frobenius() const {
    Fp2Matrix f = *this;
    for (auto& x : f.data_) x = x.frobenius();
    return f;
  }

  Fp2Matrix columns(const std::vector<std::size_t>& which) const {
    Fp2Matrix out(p_, rows_, which.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < which.size(); ++k) out(i, k) = (*this)(i, which[k]);
    }
    return out;
  }

  /// Rows [r0, r0+nr) x columns [c0, c0+nc).
  Fp2Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Fp2Matrix out(p_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    }
    return out;
  }
  void set_block(std::size_t r0, std::size_t c0, const Fp2Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }

  friend Fp2Matrix operator*(const Fp2Matrix& x, const Fp2Matrix& y) {
    if (x.cols_ != y.rows_ || x.p_ != y.p_) throw std::invalid_argument("matrix shape mismatch");
    Fp2Matrix out(x.p_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Fp2& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
      }
    }
    return out;
  }
  friend Fp2Matrix operator-(const Fp2Matrix& x) {
    Fp2Matrix out = x;
    for (auto& v : out.data_) v = -v;
    return out;
  }
  friend bool operator==(const Fp2Matrix&, const Fp2Matrix&) = default;

 private:
  std::int64_t p_ = 3;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp2> data_;
};

/// Block-diagonal [[a, 0], [0, b]].
inline Fp2Matrix block_diagonal(const Fp2Matrix& a, const Fp2Matrix& b) {
  Fp2Matrix out(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Fp2Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Fp2 inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Fp2 f = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Fp2Matrix m) { return row_reduce(m).size(); }

/// Basis of {v : m v = 0}, as the columns of the result.
inline Fp2Matrix nullspace(Fp2Matrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Fp2Matrix basis(m.p(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = Fp2(m.p(), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free_cols[k]);
  }
  return basis;
}

inline Fp2Matrix inverse(const Fp2Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Fp2Matrix aug(a.p(), n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Fp2Matrix::identity(a.p(), n));
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  return aug.block(0, n, n, n);
}

/// A subspace of F_{p^2}^N kept as the reduced row echelon form of a basis
/// (basis vectors are rows). Two subspaces are equal iff their forms are.
class Subspace {
 public:
  /// Span of the columns of `generators`.
  static Subspace column_span(const Fp2Matrix& generators) {
    Fp2Matrix rows = generators.transpose();
    const auto pivots = row_reduce(rows);
    Subspace s;
    s.ambient_ = generators.rows();
    s.basis_ = rows.block(0, 0, pivots.size(), generators.rows());
    return s;
  }
  static Subspace zero(std::int64_t p, std::size_t ambient) {
    return column_span(Fp2Matrix(p, ambient, 0));
  }
  static Subspace whole(std::int64_t p, std::size_t ambient) {
    return column_span(Fp2Matrix::identity(p, ambient));
  }

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  /// Basis vectors as columns.
  Fp2Matrix generators() const { return basis_.transpose(); }

  /// Linear image under m.
  Subspace image(const Fp2Matrix& m) const { return column_span(m * generators()); }

  /// {v : m v in this}.
  Subspace preimage(const Fp2Matrix& m) const {
    // Rows of `annihilator` span the vectors w with w^T x = 0 for x in this.
    const Fp2Matrix annihilator = nullspace(basis_).transpose();
    return column_span(nullspace(annihilator * m));
  }

  /// Entrywise Frobenius of a basis; sigma maps subspaces to subspaces.
  Subspace frobenius() const { return column_span(generators().frobenius()); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Fp2Matrix basis_;
};

}  // namespace guhecke
