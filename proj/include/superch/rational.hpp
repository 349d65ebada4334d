#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "superch/errors.hpp"

namespace superch {

/// Arbitrary-precision rational. mpq_class keeps the canonical form
/// (positive denominator, coprime parts, zero as 0/1) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

namespace detail {
/// Zero test usable from class scopes whose own is_zero() member would hide
/// the free overloads.
template <typename T>
bool ring_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "n", "-n", "n/d". Rejects decimals and zero denominators.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw ParseError("malformed rational '" + s + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw ParseError("malformed rational '" + s + "'");
  };
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check_int(num);
  Integer n(num, 10);
  Integer d(1);
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    check_int(den);
    d = Integer(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Exact square root when both numerator and denominator are perfect squares.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& n = r.get_num();
  const Integer& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Integer sn = sqrt(n);
  Integer sd = sqrt(d);
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

}  // namespace superch
