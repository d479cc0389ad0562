#pragma once

// Ekedahl-Oort type of a unitary Dieudonne space of signature (n-1, 1) via
// the canonical filtration.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "guhecke/dieudonne.hpp"

namespace guhecke {

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input does not satisfy the classification preconditions.
class NotBT1 : public ClassificationError {
 public:
  using ClassificationError::ClassificationError;
};

/// The fingerprint matches none of the models.
class NoMatch : public ClassificationError {
 public:
  using ClassificationError::ClassificationError;
};

struct FiltrationEntry {
  std::size_t dim = 0;
  std::size_t image_dim = 0;   // dim F(X)
  std::size_t kernel_dim = 0;  // dim (X meet Ker F)

  friend auto operator<=>(const FiltrationEntry&, const FiltrationEntry&) = default;
};

/// Sorted multiset of FiltrationEntry over the canonical filtration.
using Fingerprint = std::vector<FiltrationEntry>;

/// Smallest set of subspaces containing 0 and M that is closed under
/// X -> F(X) and X -> V^{-1}(X). Returned in discovery order.
inline std::vector<Subspace> canonical_filtration(const DieudonneSpace& m) {
  const Fp2Matrix f = m.f_matrix();
  const Fp2Matrix v = m.v_matrix();
  std::vector<Subspace> found{Subspace::zero(m.p(), m.dim()), Subspace::whole(m.p(), m.dim())};
  std::deque<std::size_t> pending{0, 1};
  auto visit = [&](Subspace s) {
    if (std::find(found.begin(), found.end(), s) != found.end()) return;
    found.push_back(std::move(s));
    pending.push_back(found.size() - 1);
  };
  while (!pending.empty()) {
    const Subspace x = found[pending.front()];
    pending.pop_front();
    // F(X) = F_mat * frob(X);  V^{-1}(X) = frob({z : V_mat z in X}).
    visit(x.frobenius().image(f));
    visit(x.preimage(v).frobenius());
  }
  return found;
}

inline Fingerprint fingerprint(const DieudonneSpace& m) {
  const Fp2Matrix f = m.f_matrix();
  Fingerprint out;
  for (const auto& x : canonical_filtration(m)) {
    const std::size_t image = x.frobenius().image(f).dim();
    out.push_back({x.dim(), image, x.dim() - image});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Fingerprints of the models B(r) + SS^(n-r), r = 1..n (index r-1).
inline std::vector<Fingerprint> model_fingerprints(int n, std::int64_t p) {
  std::vector<Fingerprint> out;
  for (int r = 1; r <= n; ++r) out.push_back(fingerprint(model_space(n, r, p)));
  return out;
}

inline void require_classifiable(const DieudonneSpace& m, int n) {
  const auto un = static_cast<std::size_t>(n);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m.ne() != un || m.nebar() != un) {
    throw NotBT1("graded pieces have dimensions (" + std::to_string(m.ne()) + ", " + std::to_string(m.nebar()) +
                 "), expected (" + std::to_string(n) + ", " + std::to_string(n) + ")");
  }
  const auto sig = signature(m);
  if (sig.first != un - 1 || sig.second != 1) {
    throw NotBT1("signature is (" + std::to_string(sig.first) + ", " + std::to_string(sig.second) +
                 "), expected (" + std::to_string(n - 1) + ", 1)");
  }
  if (!check_bt1(m)) throw NotBT1("Im F = Ker V, Im V = Ker F or the pairing law fails");
}

/// The r with M isomorphic to B(r) + SS^(n-r), given precomputed model
/// fingerprints.
inline int classify_type(const DieudonneSpace& m, int n, const std::vector<Fingerprint>& models) {
  require_classifiable(m, n);
  const Fingerprint fp = fingerprint(m);
  for (std::size_t r = 0; r < models.size(); ++r) {
    if (models[r] == fp) return static_cast<int>(r) + 1;
  }
  throw NoMatch("canonical filtration matches no model B(r) + SS^(n-r)");
}

inline int classify_type(const DieudonneSpace& m, int n) {
  require_classifiable(m, n);
  return classify_type(m, n, model_fingerprints(n, m.p()));
}

}  // namespace guhecke
