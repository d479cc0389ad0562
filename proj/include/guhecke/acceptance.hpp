#pragma once

// The acceptance criteria as runnable checks, shared by the acceptance test
// binary and `guhecke selftest`.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "guhecke/classify.hpp"
#include "guhecke/dieudonne.hpp"
#include "guhecke/dual_group.hpp"
#include "guhecke/hecke.hpp"
#include "guhecke/json_io.hpp"
#include "guhecke/root_datum.hpp"
#include "guhecke/slopes.hpp"

namespace guhecke::acceptance {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_seconds;  // 0 for no limit
  std::function<Outcome(std::uint64_t seed)> check;
};

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

namespace detail {

inline Outcome fail(const std::string& why) { return {false, why}; }

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    const auto num = static_cast<std::int64_t>(rng() % 41) - 20;
    const auto den = static_cast<std::int64_t>(rng() % 9) + 1;
    if (num != 0) return make_rational(num, den);
  }
}

inline Outcome factorization_certificate(std::uint64_t) {
  for (int n = 3; n <= 15; n += 2) {
    try {
      const auto f = factor_hecke(n);
      if (!f.residual.is_monic() || f.residual.degree() != n - 1) {
        return fail("R is not monic of degree n-1 at n=" + std::to_string(n));
      }
      if (f.residual * TPoly::linear(f.linear_root) != f.hecke) return fail("R*(t - root) != H_p at n=" + std::to_string(n));
    } catch (const NonZeroRemainder& e) {
      return fail("nonzero remainder at n=" + std::to_string(n) + ": " + to_string(e.remainder()));
    }
  }
  return {true, "remainder 0 for n = 3,5,...,15"};
}

inline Outcome weyl_invariance(std::uint64_t) {
  std::ostringstream sizes;
  for (int n = 3; n <= 9; n += 2) {
    const auto group = weyl_group(n);
    long expected = 1;
    for (int i = 1; i <= (n - 1) / 2; ++i) expected *= 2 * i;
    if (static_cast<long>(group.size()) != expected) return fail("|Omega(T)| wrong at n=" + std::to_string(n));
    const auto f = factor_hecke(n);
    for (const TPoly* poly : {&f.hecke, &f.residual}) {
      for (const auto& c : poly->coeffs()) {
        if (!check_weyl_invariance(c, group)) return fail("coefficient not Weyl invariant at n=" + std::to_string(n));
      }
    }
    sizes << (n == 3 ? "" : ",") << group.size();
  }
  return {true, "all coefficients of H_p and R fixed; |Omega(T)| = " + sizes.str()};
}

inline Outcome determinant_cross_check(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  long checks = 0;
  for (int n : {3, 5}) {
    const TPoly h = hecke_polynomial(n);
    for (long p : {3L, 5L}) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> x;
        for (int i = 0; i <= n; ++i) x.push_back(random_nonzero_rational(rng));
        const Rational t = random_nonzero_rational(rng);
        const Rational product_form = evaluate(h, t, Rational(p), x);
        const Rational det_form = hecke_determinant(x, p, t);
        if (product_form != det_form) {
          return fail("mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                      product_form.get_str() + " vs " + det_form.get_str());
        }
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " exact agreements"};
}

inline Outcome central_element(std::uint64_t) {
  for (int n = 3; n <= 15; n += 2) {
    const auto un = static_cast<std::size_t>(n);
    const Monomial e = central_monomial(n);
    if (norm_monomial(Monomial::x(un, 0)) != e) return fail("norm(x0) != e at n=" + std::to_string(n));
    if (pairing(rho(n), as_weight(e)) != 0) return fail("<rho, lambda> != 0 at n=" + std::to_string(n));
    if (satake_alpha(LaurentPoly(e), n) != LaurentPoly(e)) return fail("alpha moves e at n=" + std::to_string(n));
  }
  return {true, "norm(x0) = x0^2*x1*...*xn and alpha(e) = e for n = 3..15"};
}

inline Outcome signatures(std::uint64_t) {
  for (long p : {3L, 5L, 7L}) {
    if (signature(reduction(make_ss(p))) != std::pair<std::size_t, std::size_t>{1, 0}) {
      return fail("signature(SS) != (1,0) at p=" + std::to_string(p));
    }
    for (int d = 1; d <= 9; ++d) {
      const auto sig = signature(reduction(make_b(d, p)));
      if (sig != std::pair<std::size_t, std::size_t>{static_cast<std::size_t>(d - 1), 1}) {
        return fail("signature(B(" + std::to_string(d) + ")) wrong at p=" + std::to_string(p));
      }
    }
  }
  return {true, "SS -> (1,0), B(d) -> (d-1,1) for d <= 9, p in {3,5,7}"};
}

inline Outcome slopes(std::uint64_t) {
  const Rational half(1, 2);
  for (long p : {3L, 5L, 7L}) {
    for (int d = 1; d <= 9; ++d) {
      SlopeMultiset expected;
      if (d % 2 == 1) {
        expected.add(half, 2 * d);
      } else {
        expected.add(half - Rational(1) / Rational(d), d);
        expected.add(half + Rational(1) / Rational(d), d);
      }
      const auto got = newton_slopes(make_b(d, p));
      if (got != expected) {
        return fail("B(" + std::to_string(d) + ") slopes " + to_string(got) + " != " + to_string(expected));
      }
    }
  }
  return {true, "B(d): 1/2 for odd d <= 9, 1/2 +- 1/d for even d <= 8"};
}

inline Outcome bt1_axioms(std::uint64_t seed) {
  long checks = 0;
  for (long p : {3L, 5L, 7L}) {
    std::vector<DieudonneSpace> models{reduction(make_ss(p))};
    for (int d = 1; d <= 9; ++d) models.push_back(reduction(make_b(d, p)));
    for (std::size_t k = 0; k < models.size(); ++k) {
      if (!check_bt1(models[k])) return fail("model " + std::to_string(k) + " fails at p=" + std::to_string(p));
      ++checks;
      for (std::uint64_t s = 0; s < 100; ++s) {
        const auto changed = random_basechange(models[k], seed * 1000003ULL + s);
        if (!check_bt1(changed)) return fail("base change " + std::to_string(s) + " of model " + std::to_string(k) + " fails");
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " spaces pass (models and 100 base changes each)"};
}

inline Outcome classification(std::uint64_t seed) {
  long checks = 0;
  for (long p : {3L, 5L}) {
    for (int n = 1; n <= 7; ++n) {
      const auto models = model_fingerprints(n, p);
      for (std::size_t a = 0; a < models.size(); ++a) {
        for (std::size_t b = a + 1; b < models.size(); ++b) {
          if (models[a] == models[b]) {
            return fail("models r=" + std::to_string(a + 1) + " and r=" + std::to_string(b + 1) +
                        " share a fingerprint at n=" + std::to_string(n));
          }
        }
      }
      for (int r = 1; r <= n; ++r) {
        const DieudonneSpace model = model_space(n, r, p);
        for (std::uint64_t s = 0; s < 20; ++s) {
          const int got = classify_type(random_basechange(model, seed * 7919ULL + s), n, models);
          if (got != r) {
            return fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " classified as " + std::to_string(got));
          }
          ++checks;
        }
      }
    }
  }
  return {true, std::to_string(checks) + " round trips recovered r; model fingerprints distinct"};
}

inline Outcome isocrystal_audit(std::uint64_t) {
  long checks = 0;
  for (int n = 1; n <= 99; n += 2) {
    for (int r = 0; r <= (n - 1) / 2; ++r) {
      const auto shape = isocrystal_shape(n, r);
      if (shape.slopes.total() != 2 * n) return fail("total != 2n at n=" + std::to_string(n) + " r=" + std::to_string(r));
      if (!shape.slopes.is_symmetric()) return fail("not symmetric at n=" + std::to_string(n));
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " shapes of height 2n, symmetric about 1/2"};
}

inline Outcome strata_table(std::uint64_t) {
  for (int n = 1; n <= 99; n += 2) {
    const auto rows = strata_dims(n);
    int max_odd = -1;
    int argmax_odd = 0;
    for (const auto& row : rows) {
      const int expected = (row.r % 2 == 0) ? n - row.r / 2 : row.r / 2;  // dim M_2i = n-i, dim M_2i+1 = i
      if (row.dim != expected) return fail("dim(M_" + std::to_string(row.r) + ") wrong at n=" + std::to_string(n));
      if (row.r % 2 == 1 && row.dim >= max_odd) {
        max_odd = row.dim;
        argmax_odd = row.r;
      }
      if (row.r == 2 && row.dim != n - 1) return fail("dim(M_2) != n-1 at n=" + std::to_string(n));
    }
    if (max_odd != (n - 1) / 2 || argmax_odd != n) return fail("supersingular dimension wrong at n=" + std::to_string(n));
  }
  return {true, "n = 1..99: both dimension formulas, ss dim (n-1)/2 at r=n, dim M_2 = n-1"};
}

}  // namespace detail

inline std::vector<Criterion> criteria() {
  return {
      {1, "factorization certificate", 10.0, detail::factorization_certificate},
      {2, "Weyl invariance", 0.0, detail::weyl_invariance},
      {3, "determinant cross-check", 0.0, detail::determinant_cross_check},
      {4, "central element", 0.0, detail::central_element},
      {5, "signatures", 0.0, detail::signatures},
      {6, "Newton slopes of B(d)", 0.0, detail::slopes},
      {7, "BT1 axioms", 0.0, detail::bt1_axioms},
      {8, "classification round trip", 60.0, detail::classification},
      {9, "isocrystal dimension audit", 0.0, detail::isocrystal_audit},
      {10, "strata table", 0.0, detail::strata_table},
  };
}

inline CriterionResult run(const Criterion& c, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.check(seed);
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.passed && c.time_limit_seconds > 0 && seconds > c.time_limit_seconds) {
    outcome = {false, "exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s"};
  }
  return {c.id, c.name, outcome.passed, outcome.detail, seconds};
}

/// Runs every criterion, printing one line each. Returns the number failed.
/// Timings go to `os` only when show_timing is set so output stays
/// byte-identical across runs otherwise.
inline int run_all(std::ostream& os, std::uint64_t seed, bool show_timing = false) {
  const auto all = criteria();
  int failed = 0;
  for (const auto& c : all) {
    const auto result = run(c, seed);
    if (!result.passed) ++failed;
    os << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << ". " << result.name << ": " << result.detail;
    if (show_timing) os << " (" << result.seconds << " s)";
    os << std::endl;
  }
  os << (all.size() - static_cast<std::size_t>(failed)) << "/" << all.size() << " criteria passed\n";
  return failed;
}

/// A fixture that cannot be read or classified.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classifies every fixture listed in dir/manifest.json
/// ({"file.json": {"n": 5, "type": 5}, ...}) and compares with the expected
/// type. Throws FixtureError on unreadable, malformed or misclassified data.
inline std::size_t check_fixtures(const std::filesystem::path& dir, std::ostream& os) {
  auto load = [](const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open " + path.string());
    try {
      return json_io::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw FixtureError("malformed JSON in " + path.string() + ": " + e.what());
    }
  };
  const auto manifest = load(dir / "manifest.json");
  std::size_t count = 0;
  for (const auto& [file, expect] : manifest.items()) {
    try {
      const int n = expect.at("n").get<int>();
      const int type = expect.at("type").get<int>();
      const int got = classify_type(json_io::dieudonne_space_from_json(load(dir / file)), n);
      if (got != type) throw FixtureError(file + ": classified as " + std::to_string(got) + ", expected " + std::to_string(type));
      os << "[PASS] fixture " << file << ": type " << got << '\n';
      ++count;
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& e) {
      throw FixtureError(file + ": " + e.what());
    }
  }
  return count;
}

}  // namespace guhecke::acceptance
