// guhecke: command-line front end.
//
//   guhecke hecke --n N [--format json|csv|pretty]
//   guhecke dd models --n N --p P [--r R] [--seed S] [--format ...]
//   guhecke dd classify --input FILE --n N [--format json|pretty]
//   guhecke dd slopes --d D --p P [--format ...]
//   guhecke dd isoc --n N --r R [--format ...]
//   guhecke dd strata --n N [--format ...]
//   guhecke selftest [--seed S] [--fixtures DIR]
//
// Exit codes: 0 success, 1 usage error, 2 certificate failure,
// 3 data or classification error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "guhecke/acceptance.hpp"
#include "guhecke/classify.hpp"
#include "guhecke/dieudonne.hpp"
#include "guhecke/hecke.hpp"
#include "guhecke/json_io.hpp"
#include "guhecke/slopes.hpp"

namespace {

using namespace guhecke;
using json_io::json;

enum Exit : int { kOk = 0, kUsage = 1, kCertificate = 2, kData = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n() {
  const char* env = std::getenv("GUHECKE_MAX_N");
  if (env == nullptr || *env == '\0') return 15;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError("GUHECKE_MAX_N must be an integer");
  }
}

void require_within_cap(int n) {
  const int cap = max_n();
  if (n > cap) throw UsageError("n=" + std::to_string(n) + " exceeds GUHECKE_MAX_N=" + std::to_string(cap));
}

std::string join_x(const Monomial& m) {
  std::string out;
  for (auto e : m.x_exps) out += "," + std::to_string(e);
  return out;
}

void emit_csv_poly(std::ostream& os, const std::string& name, const TPoly& p) {
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    for (const auto& [m, c] : p.coeffs()[k].terms()) {
      os << name << ',' << k << ',' << c.get_str() << ',' << m.q_exp << join_x(m) << '\n';
    }
  }
}

int cmd_hecke(int n, const std::string& format) {
  try {
    require_odd_rank(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  require_within_cap(n);
  HeckeFactorization f = [&] {
    try {
      return factor_hecke(n);
    } catch (const NonZeroRemainder& e) {
      throw CertificateError("factorization certificate failed; remainder: " + to_string(e.remainder()));
    }
  }();

  if (format == "json") {
    std::cout << json_io::to_json(n, f).dump() << '\n';
  } else if (format == "csv") {
    std::cout << "poly,degree,coeff,q";
    for (int i = 0; i <= n; ++i) std::cout << ",x" << i;
    std::cout << '\n';
    emit_csv_poly(std::cout, "Hp", f.hecke);
    emit_csv_poly(std::cout, "R", f.residual);
  } else {
    const auto roots = hecke_roots(n);
    std::cout << "Hecke polynomial of GU(" << n - 1 << ",1), n = " << n << "\n\n";
    std::cout << "H_p(t) =";
    for (const auto& root : roots) std::cout << "\n    (t - " << to_string(root) << ")";
    std::cout << "\n\n       = R(t) * (t - " << to_string(f.linear_root) << ")\n\nR(t) =";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i == roots.size() / 2) continue;
      std::cout << "\n    (t - " << to_string(roots[i]) << ")";
    }
    std::cout << "\n\nR(t) expanded = " << to_string(f.residual) << "\n";
    std::cout << "\nremainder: 0\n";
    std::cout << "Weyl invariant: " << (f.weyl_invariant ? "yes" : "NO") << " (|Omega(T)| = "
              << weyl_group_order(n) << ")\n";
    std::cout << "sigma invariant: " << (f.sigma_invariant ? "yes" : "NO") << '\n';
  }
  return kOk;
}

void emit_slopes(const SlopeMultiset& s, const std::string& format) {
  if (format == "json") {
    std::cout << json_io::to_json(s).dump() << '\n';
  } else if (format == "csv") {
    std::cout << "slope,mult\n";
    for (const auto& part : s.parts()) std::cout << part.slope.get_str() << ',' << part.mult << '\n';
  } else {
    std::cout << to_string(s) << '\n';
  }
}

int cmd_slopes(int d, long p, const std::string& format) {
  if (d < 1) throw UsageError("d must be >= 1");
  if (!is_odd_prime(p)) throw UsageError("p must be an odd prime");
  emit_slopes(newton_slopes(make_b(d, p)), format);
  return kOk;
}

int cmd_isoc(int n, int r, const std::string& format) {
  IsocrystalShape shape = [&] {
    try {
      return isocrystal_shape(n, r);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (format == "json") {
    std::cout << json_io::to_json(shape).dump() << '\n';
  } else if (format == "csv") {
    std::cout << "slope,dim,copies\n";
    for (const auto& f : shape.factors) std::cout << f.slope.get_str() << ',' << f.dim << ',' << f.copies << '\n';
  } else {
    std::cout << "n = " << n << ", r = " << r << "\nN =";
    bool first = true;
    for (const auto& f : shape.factors) {
      std::cout << (first ? " " : " x ") << "N_{" << f.slope.get_str() << "}";
      if (f.copies != 1) std::cout << "^" << f.copies;
      first = false;
    }
    std::cout << "\nslopes: " << to_string(shape.slopes) << '\n';
  }
  return kOk;
}

int cmd_strata(int n, const std::string& format) {
  std::vector<StratumRow> rows;
  try {
    rows = strata_dims(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    std::cout << json_io::to_json(rows).dump() << '\n';
  } else if (format == "csv") {
    std::cout << "r,dim,ordinary,supersingular,newton\n";
    for (const auto& row : rows) {
      std::cout << row.r << ',' << row.dim << ',' << row.ordinary << ',' << row.supersingular << ",\""
                << to_string(row.newton) << "\"\n";
    }
  } else {
    std::cout << "Ekedahl-Oort strata, n = " << n << "\n";
    std::cout << "  r  dim  locus\n";
    for (const auto& row : rows) {
      std::cout << (row.r < 10 ? "  " : " ") << row.r << (row.dim < 10 ? "    " : "   ") << row.dim << "  "
                << (row.ordinary ? "mu-ordinary" : row.supersingular ? "supersingular" : "non-supersingular")
                << "  " << to_string(row.newton) << '\n';
    }
  }
  return kOk;
}

int cmd_models(int n, long p, std::optional<int> only_r, std::optional<std::uint64_t> seed, const std::string& format) {
  if (n < 1) throw UsageError("n must be >= 1");
  require_within_cap(n);
  if (!is_odd_prime(p)) throw UsageError("p must be an odd prime");
  if (only_r && (*only_r < 1 || *only_r > n)) throw UsageError("r must lie in 1..n");
  auto build = [&](int r) {
    DieudonneSpace m = model_space(n, r, p);
    return seed ? random_basechange(m, *seed) : m;
  };
  if (only_r) {
    const DieudonneSpace m = build(*only_r);
    if (format == "pretty") {
      const auto sig = signature(m);
      std::cout << "B(" << *only_r << ") + SS^" << n - *only_r << " over F_" << p << "^2, signature (" << sig.first
                << "," << sig.second << ")\n";
    }
    std::cout << json_io::to_json(m).dump() << '\n';
    return kOk;
  }
  json out = json::array();
  for (int r = 1; r <= n; ++r) {
    const DieudonneSpace m = build(r);
    const auto sig = signature(m);
    out.push_back(json{{"r", r},
                       {"signature", json::array({sig.first, sig.second})},
                       {"bt1", check_bt1(m)},
                       {"fingerprint", json_io::to_json(fingerprint(m))},
                       {"space", json_io::to_json(m)}});
  }
  std::cout << (format == "pretty" ? out.dump(2) : out.dump()) << '\n';
  return kOk;
}

int cmd_classify(const std::string& input, int n, const std::string& format) {
  if (n < 1) throw UsageError("n must be >= 1");
  require_within_cap(n);
  std::ifstream in(input);
  if (!in) throw UsageError("cannot open " + input);
  DieudonneSpace m = [&] {
    try {
      return json_io::dieudonne_space_from_json(json::parse(in));
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed Dieudonne space JSON: ") + e.what());
    }
  }();
  try {
    const int type = classify_type(m, n);
    if (format == "pretty") {
      std::cout << "type " << type << ": B(" << type << ") + SS^" << n - type << '\n';
    } else {
      std::cout << json{{"type", type}}.dump() << '\n';
    }
  } catch (const ClassificationError& e) {
    throw DataError(e.what());
  }
  return kOk;
}

int cmd_selftest(std::uint64_t seed, const std::string& fixtures, bool timing) {
  const int failed = acceptance::run_all(std::cout, seed, timing);
  try {
    acceptance::check_fixtures(fixtures, std::cout);
  } catch (const acceptance::FixtureError& e) {
    std::cout << "[FAIL] fixture: " << e.what() << '\n';
    return kData;
  }
  return failed == 0 ? kOk : kCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke polynomials of GU(n-1,1) and unitary Dieudonne spaces"};
  app.require_subcommand(1);

  std::string format = "json";
  const auto formats = CLI::IsMember({"json", "csv", "pretty"});
  int n = 0;
  int d = 0;
  int r = 0;
  long p = 0;
  std::uint64_t seed = 0;
  std::string input;
  std::string fixtures = GUHECKE_FIXTURE_DIR;
  bool timing = false;

  auto* hecke = app.add_subcommand("hecke", "Hecke polynomial, its factorization and invariance report");
  hecke->add_option("--n", n, "odd rank n >= 3")->required();
  hecke->add_option("--format", format)->check(formats);

  auto* dd = app.add_subcommand("dd", "Unitary Dieudonne spaces");
  dd->require_subcommand(1);
  auto* models = dd->add_subcommand("models", "Model spaces B(r) + SS^(n-r)");
  models->add_option("--n", n)->required();
  models->add_option("--p", p)->required();
  auto* models_r = models->add_option("--r", r, "emit only this type, as a bare space");
  auto* models_seed = models->add_option("--seed", seed, "apply a random base change");
  models->add_option("--format", format)->check(formats);

  auto* classify = dd->add_subcommand("classify", "Ekedahl-Oort type of a space read from JSON");
  classify->add_option("--input", input)->required();
  classify->add_option("--n", n)->required();
  classify->add_option("--format", format)->check(formats);

  auto* slopes = dd->add_subcommand("slopes", "Newton slopes of B(d)");
  slopes->add_option("--d", d)->required();
  slopes->add_option("--p", p)->required();
  slopes->add_option("--format", format)->check(formats);

  auto* isoc = dd->add_subcommand("isoc", "Isocrystal N(r) x N_{1/2}^(n-2r)");
  isoc->add_option("--n", n)->required();
  isoc->add_option("--r", r)->required();
  isoc->add_option("--format", format)->check(formats);

  auto* strata = dd->add_subcommand("strata", "Ekedahl-Oort strata dimensions");
  strata->add_option("--n", n)->required();
  strata->add_option("--format", format)->check(formats);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria and fixture checks");
  selftest->add_option("--seed", seed);
  selftest->add_option("--fixtures", fixtures, "fixture directory with manifest.json");
  selftest->add_flag("--timing", timing, "print per-criterion wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (hecke->parsed()) return cmd_hecke(n, format);
    if (models->parsed()) {
      return cmd_models(n, p, models_r->count() ? std::optional<int>(r) : std::nullopt,
                        models_seed->count() ? std::optional<std::uint64_t>(seed) : std::nullopt, format);
    }
    if (classify->parsed()) return cmd_classify(input, n, format);
    if (slopes->parsed()) return cmd_slopes(d, p, format);
    if (isoc->parsed()) return cmd_isoc(n, r, format);
    if (strata->parsed()) return cmd_strata(n, format);
    if (selftest->parsed()) return cmd_selftest(seed, fixtures, timing);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const CertificateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCertificate;
  }
  return kUsage;
}
