#pragma once

// Plain-text and LaTeX renderings. LaTeX uses \str_j for the supertrace of
// M^j; define \newcommand{\str}{{\rm str}} (or similar) when typesetting.

#include <sstream>
#include <string>

#include "superch/char_function.hpp"
#include "superch/identity_engine.hpp"
#include "superch/spoly.hpp"

namespace superch {

inline std::string latex(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

inline std::string latex(const SPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c0] : p.terms()) {
    Rational c = c0;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (m.is_one()) {
      os << latex(c);
      continue;
    }
    if (c != 1) os << latex(c) << "\\,";
    bool first_sym = true;
    for (int j = 1; j <= m.max_symbol(); ++j) {
      const auto e = m.exponent(j);
      if (e == 0) continue;
      if (!first_sym) os << "\\,";
      first_sym = false;
      if (e == 1) os << "\\str_{" << j << "}";
      else os << "{\\str_{" << j << "}}^{" << e << "}";
    }
  }
  return os.str();
}

namespace detail {

inline std::string matrix_power(int k, bool tex) {
  if (k == 0) return "I";
  if (k == 1) return "M";
  return tex ? "M^{" + std::to_string(k) + "}" : "M^" + std::to_string(k);
}

}  // namespace detail

/// "(S1^2)*M^2 + (-S1*S2)*M + (...)*I = 0"; zero coefficients are omitted.
inline std::string to_text(const CHIdentity& id) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < id.coeffs.size(); ++j) {
    if (id.coeffs[j].is_zero()) continue;
    if (!first) os << "\n  + ";
    first = false;
    os << "(" << id.coeffs[j].str() << ")*" << detail::matrix_power(id.n() - static_cast<int>(j), false);
  }
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

inline std::string to_latex(const CHIdentity& id) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < id.coeffs.size(); ++j) {
    if (id.coeffs[j].is_zero()) continue;
    if (!first) os << "\n  + ";
    first = false;
    os << "\\left(" << latex(id.coeffs[j]) << "\\right) "
       << detail::matrix_power(id.n() - static_cast<int>(j), true);
  }
  if (first) os << "0";
  os << " = 0";
  return os.str();
}

inline std::string latex(const Multivector& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : m.terms()) {
    Rational c = t.coeff;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (t.blade.is_scalar()) {
      os << latex(c);
      continue;
    }
    if (c != 1) os << latex(c);
    for (int i : t.blade.indices()) os << "\\theta_{" << i << "}";
  }
  return os.str();
}

inline std::string latex(const GrassmannPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const auto& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == Multivector(Rational(1));
    if (k == 0 || !unit) os << "\\left(" << latex(c) << "\\right)";
    if (k >= 1) os << "x";
    if (k > 1) os << "^{" << k << "}";
  }
  return os.str();
}

inline std::string to_text(const RatioForm& r) {
  return "(" + r.numerator.str() + ") / (" + r.denominator.str() + ")";
}

inline std::string to_latex(const RatioForm& r) {
  return "\\frac{" + latex(r.numerator) + "}{" + latex(r.denominator) + "}";
}

}  // namespace superch
