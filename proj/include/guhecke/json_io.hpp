#pragma once

// JSON encodings of the library's values (nlohmann/json).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "guhecke/classify.hpp"
#include "guhecke/dieudonne.hpp"
#include "guhecke/hecke.hpp"
#include "guhecke/laurent.hpp"
#include "guhecke/slopes.hpp"
#include "guhecke/tpoly.hpp"

namespace guhecke::json_io {

/// Insertion-ordered so emitted keys follow the documented schemas.
using json = nlohmann::ordered_json;

/// {"coeff":"3/2","q":2,"x":[2,1,0,-1]}
inline json term_to_json(const Monomial& m, const Rational& c) {
  return json{{"coeff", c.get_str()}, {"q", m.q_exp}, {"x", m.x_exps}};
}

inline json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(term_to_json(m, c));
  return terms;
}

inline json to_json(const TPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return coeffs;
}

/// Inverse of to_json(LaurentPoly). n is needed for the empty (zero) array.
inline LaurentPoly laurent_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial must be a JSON array of terms");
  LaurentPoly out(n);
  for (const auto& term : j) {
    const auto x = term.at("x").get<std::vector<std::int64_t>>();
    if (x.size() != n + 1) throw std::invalid_argument("term has the wrong number of x exponents");
    out.add_term(Monomial(term.at("q").get<std::int64_t>(), x), parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

inline json to_json(const Fp2Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).a(), m(i, j).b()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Fp2Matrix fp2_matrix_from_json(const json& j, std::int64_t p, std::size_t rows, std::size_t cols,
                                      const std::string& name) {
  if (!j.is_array() || j.size() != rows) {
    throw std::invalid_argument(name + ": expected " + std::to_string(rows) + " rows");
  }
  Fp2Matrix m(p, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument(name + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                                  " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& e = row[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw std::invalid_argument(name + ": field elements are written [a, b] for a + b*u");
      }
      m(i, k) = Fp2(p, e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
    }
  }
  return m;
}

/// {"p":3,"nonresidue":2,"ne":..,"nebar":..,"F_e2ebar":[[[a,b],..],..],...,"gram":[[..]]}
/// Element [a, b] is a + b*u with u^2 = nonresidue, the least quadratic
/// non-residue mod p. Matrices map the source piece to the target piece, so
/// F_e2ebar has nebar rows and ne columns.
inline json to_json(const DieudonneSpace& m) {
  return json{{"p", m.p()},
              {"nonresidue", least_nonresidue(m.p())},
              {"ne", m.ne()},
              {"nebar", m.nebar()},
              {"F_e2ebar", to_json(m.f_e2ebar())},
              {"F_ebar2e", to_json(m.f_ebar2e())},
              {"V_e2ebar", to_json(m.v_e2ebar())},
              {"V_ebar2e", to_json(m.v_ebar2e())},
              {"gram", to_json(m.gram())}};
}

inline DieudonneSpace dieudonne_space_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("Dieudonne space must be a JSON object");
  const auto p = j.at("p").get<std::int64_t>();
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (j.contains("nonresidue") && j.at("nonresidue").get<std::int64_t>() != least_nonresidue(p)) {
    throw std::invalid_argument("nonresidue must be the least quadratic non-residue mod p");
  }
  const auto ne = j.at("ne").get<std::size_t>();
  const auto nebar = j.at("nebar").get<std::size_t>();
  return DieudonneSpace(p, ne, nebar, fp2_matrix_from_json(j.at("F_e2ebar"), p, nebar, ne, "F_e2ebar"),
                        fp2_matrix_from_json(j.at("F_ebar2e"), p, ne, nebar, "F_ebar2e"),
                        fp2_matrix_from_json(j.at("V_e2ebar"), p, nebar, ne, "V_e2ebar"),
                        fp2_matrix_from_json(j.at("V_ebar2e"), p, ne, nebar, "V_ebar2e"),
                        fp2_matrix_from_json(j.at("gram"), p, ne, nebar, "gram"));
}

/// [{"slope":"1/4","mult":4},...]
inline json to_json(const SlopeMultiset& s) {
  json out = json::array();
  for (const auto& part : s.parts()) out.push_back(json{{"slope", part.slope.get_str()}, {"mult", part.mult}});
  return out;
}

inline json to_json(const IsocrystalShape& shape) {
  json factors = json::array();
  for (const auto& f : shape.factors) {
    factors.push_back(json{{"slope", f.slope.get_str()}, {"dim", f.dim}, {"copies", f.copies}});
  }
  return json{{"n", shape.n}, {"r", shape.r}, {"slopes", to_json(shape.slopes)}, {"factors", factors}};
}

inline json to_json(const std::vector<StratumRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back(json{{"r", row.r},
                       {"dim", row.dim},
                       {"ordinary", row.ordinary},
                       {"supersingular", row.supersingular},
                       {"newton", to_json(row.newton)}});
  }
  return out;
}

inline json to_json(const Fingerprint& fp) {
  json out = json::array();
  for (const auto& e : fp) out.push_back(json::array({e.dim, e.image_dim, e.kernel_dim}));
  return out;
}

/// {"n":5,"Hp":[...],"R":[...],"linear_root":{...},"weyl_invariant":true,...}
inline json to_json(int n, const HeckeFactorization& f) {
  const auto& [m, c] = *f.linear_root.terms().begin();
  return json{{"n", n},
              {"Hp", to_json(f.hecke)},
              {"R", to_json(f.residual)},
              {"linear_root", term_to_json(m, c)},
              {"remainder_zero", true},
              {"weyl_invariant", f.weyl_invariant},
              {"sigma_invariant", f.sigma_invariant}};
}

}  // namespace guhecke::json_io
