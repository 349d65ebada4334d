#pragma once

// The characteristic function h(x) = sdet(xI - M) as a ratio of polynomials
// with even Grassmann coefficients, in its two division-free forms:
//
//   via d:  det[d(x)(xI - A) - B adj(xI - D) C] / d(x)^(p+1)
//   via a:  a(x)^(q+1) / det[a(x)(xI - D) - C adj(xI - A) B]
//
// with a(x) = det(xI - A) and d(x) = det(xI - D).

#include <string>

#include "superch/matrix.hpp"
#include "superch/supermatrix.hpp"
#include "superch/unipoly.hpp"

namespace superch {

enum class RatioVariant { ViaD, ViaA };

struct RatioForm {
  GrassmannPoly numerator;
  GrassmannPoly denominator;
  RatioVariant variant;
};

namespace detail {

inline Matrix<GrassmannPoly> lift(const Matrix<Multivector>& m) {
  return m.map([](const Multivector& e) { return GrassmannPoly(e); });
}

/// xI - E with polynomial entries.
inline Matrix<GrassmannPoly> shifted(const Matrix<Multivector>& e) {
  Matrix<GrassmannPoly> out = -lift(e);
  for (std::size_t i = 0; i < e.rows(); ++i) out(i, i) += GrassmannPoly::x_power(1);
  return out;
}

}  // namespace detail

/// det(xI - E): monic of degree size(E).
inline GrassmannPoly char_poly_block(const EvenMatrix& e) { return char_poly(e); }

inline RatioForm h_via_d(const SuperMatrix& m) {
  const auto x_minus_d = detail::shifted(m.D());
  const GrassmannPoly d = det(x_minus_d);
  const auto correction = detail::lift(m.B()) * adjugate(x_minus_d) * detail::lift(m.C());
  const auto inner = d * detail::shifted(m.A()) - correction;
  return {det(inner), pow(d, static_cast<unsigned>(m.p() + 1)), RatioVariant::ViaD};
}

inline RatioForm h_via_a(const SuperMatrix& m) {
  const auto x_minus_a = detail::shifted(m.A());
  const GrassmannPoly a = det(x_minus_a);
  const auto correction = detail::lift(m.C()) * adjugate(x_minus_a) * detail::lift(m.B());
  const auto inner = a * detail::shifted(m.D()) - correction;
  return {pow(a, static_cast<unsigned>(m.q() + 1)), det(inner), RatioVariant::ViaA};
}

/// Cross-multiplied equality num_d * den_a == num_a * den_d.
inline bool ratio_forms_equal(const RatioForm& f, const RatioForm& g) {
  return f.numerator * g.denominator == g.numerator * f.denominator;
}

inline bool check_equivalence(const SuperMatrix& m) {
  return ratio_forms_equal(h_via_d(m), h_via_a(m));
}

/// a(x)^(q+1) d(x)^(p+1), monic of degree 2pq + p + q.
inline GrassmannPoly full_char_poly(const SuperMatrix& m) {
  const GrassmannPoly a = char_poly_block(m.A());
  const GrassmannPoly d = char_poly_block(m.D());
  return pow(a, static_cast<unsigned>(m.q() + 1)) * pow(d, static_cast<unsigned>(m.p() + 1));
}

}  // namespace superch
