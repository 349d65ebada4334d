#pragma once

// JSON (de)serialization. Rational coefficients are exact strings such as
// "3", "-1/4".

#include <string>
#include <vector>

#include "json.hpp"
#include "superch/char_function.hpp"
#include "superch/errors.hpp"
#include "superch/exterior_algebra.hpp"
#include "superch/identity_engine.hpp"
#include "superch/spoly.hpp"
#include "superch/supermatrix.hpp"
#include "superch/verifier.hpp"

namespace superch {

using Json = nlohmann::ordered_json;

// {"N": int, "terms": [{"blade": [indices], "coeff": "num/den"}]}
inline Json to_json(const Multivector& m, int num_generators) {
  Json terms = Json::array();
  for (const auto& t : m.terms())
    terms.push_back({{"blade", t.blade.indices()}, {"coeff", to_string(t.coeff)}});
  return {{"N", num_generators}, {"terms", std::move(terms)}};
}
inline Json to_json(const Multivector& m) { return to_json(m, m.num_generators()); }

inline Multivector multivector_from_json(const Json& j) {
  try {
    Multivector m(j.at("N").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto idx = t.at("blade").get<std::vector<int>>();
      for (int i : idx)
        if (i < 1) throw ParseError("blade index must be >= 1");
      m.add_term(Blade(idx), parse_rational(t.at("coeff").get<std::string>()));
    }
    return m;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("multivector: ") + e.what());
  }
}

// {"p": int, "q": int, "N": int, "entries": [[Multivector, ...], ...]}
inline Json to_json(const SuperMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.size(); ++k)
      row.push_back(to_json(m(static_cast<std::size_t>(i), static_cast<std::size_t>(k)), m.num_generators()));
    rows.push_back(std::move(row));
  }
  return {{"p", m.p()}, {"q", m.q()}, {"N", m.num_generators()}, {"entries", std::move(rows)}};
}

inline SuperMatrix supermatrix_from_json(const Json& j) {
  try {
    const int p = j.at("p").get<int>();
    const int q = j.at("q").get<int>();
    const int n = j.at("N").get<int>();
    if (p < 0 || q < 0) throw ParseError("negative block size");
    const auto size = static_cast<std::size_t>(p + q);
    const auto& rows = j.at("entries");
    if (rows.size() != size) throw ParseError("entries must have p + q rows");
    Matrix<Multivector> e(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      if (rows[r].size() != size) throw ParseError("row " + std::to_string(r + 1) + " must have p + q entries");
      for (std::size_t c = 0; c < size; ++c) e(r, c) = multivector_from_json(rows[r][c]);
    }
    return SuperMatrix(p, q, n, std::move(e));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("supermatrix: ") + e.what());
  }
}

// {"num_symbols": n, "terms": [{"exponents": [e1..en], "coeff": "num/den"}]}
inline Json to_json(const SPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(p.num_symbols()), 0);
    for (int k = 1; k <= m.max_symbol(); ++k) e[static_cast<std::size_t>(k - 1)] = m.exponent(k);
    terms.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  }
  return {{"num_symbols", p.num_symbols()}, {"terms", std::move(terms)}};
}

inline SPoly spoly_from_json(const Json& j) {
  try {
    const int n = j.at("num_symbols").get<int>();
    SPoly p(n);
    for (const auto& t : j.at("terms"))
      p.add_term(Monomial(t.at("exponents").get<std::vector<std::uint32_t>>()),
                 parse_rational(t.at("coeff").get<std::string>()));
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
}

inline Json to_json(const CHIdentity& id) {
  Json coeffs = Json::array();
  Json text = Json::array();
  for (const auto& c : id.coeffs) {
    coeffs.push_back(to_json(c));
    text.push_back(c.str());
  }
  return {{"p", id.p},           {"q", id.q},           {"osp", id.osp},
          {"base_weight", id.base_weight}, {"coeffs", std::move(coeffs)}, {"coeffs_text", std::move(text)}};
}

inline CHIdentity identity_from_json(const Json& j) {
  try {
    CHIdentity id;
    id.p = j.at("p").get<int>();
    id.q = j.at("q").get<int>();
    id.osp = j.value("osp", false);
    id.base_weight = j.value("base_weight", static_cast<std::uint64_t>(2 * id.p * id.q));
    for (const auto& c : j.at("coeffs")) id.coeffs.push_back(spoly_from_json(c).with_symbols(id.n()));
    if (id.coeffs.size() != static_cast<std::size_t>(id.n()) + 1)
      throw ParseError("identity must have p + q + 1 coefficients");
    return id;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("identity: ") + e.what());
  }
}

inline Json to_json(const GrassmannPoly& p, int num_generators) {
  Json c = Json::array();
  for (const auto& m : p.coeffs()) c.push_back(to_json(m, num_generators));
  return c;
}

inline Json to_json(const RatioForm& r, int num_generators) {
  return {{"variant", r.variant == RatioVariant::ViaD ? "via_d" : "via_a"},
          {"numerator", to_json(r.numerator, num_generators)},
          {"denominator", to_json(r.denominator, num_generators)}};
}

/// Wall time is left out so repeated runs produce identical documents.
inline Json to_json(const VerificationReport& r) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    Json e = {{"trial", o.trial},
              {"sample_seed", o.sample_seed},
              {"status", o.skipped ? "skipped" : (o.passed ? "pass" : "fail")}};
    if (!o.note.empty()) e["note"] = o.note;
    if (o.residual) e["residual"] = to_json(*o.residual);
    outcomes.push_back(std::move(e));
  }
  return {{"p", r.p},
          {"q", r.q},
          {"osp", r.osp},
          {"seed", r.seed},
          {"trials", r.trials},
          {"generators", r.num_generators},
          {"soul_grade", r.max_soul_grade},
          {"passes", r.passes},
          {"failures", r.failures},
          {"skips", r.skips},
          {"outcomes", std::move(outcomes)}};
}

}  // namespace superch
