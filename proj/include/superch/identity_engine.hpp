#pragma once

// Super Cayley-Hamilton coefficients from the generating function
//
//   F(S,t) = (1 - mu_1 t - ... - mu_q t^q)^2 * G(S,t),
//   G(S,t) = exp(-sum_i S_i t^i / i),
//
// where mu solves the Toeplitz system B mu = (b_{p+1}, ..., b_{p+q}) built
// from the ordinary (p+q, 0) coefficients b_j. The identity
//
//   a_0 M^n + a_1 M^(n-1) + ... + a_n I = 0,   n = p + q,
//
// has a_j = det(B)^2 [t^j] F, which is a polynomial in the supertraces.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superch/errors.hpp"
#include "superch/matrix.hpp"
#include "superch/series.hpp"
#include "superch/spoly.hpp"

namespace superch {

/// coeffs[j] multiplies M^(n-j). Generic identities have coeffs[j] of
/// weighted degree 2pq + j; base_weight records the degree of coeffs[0]
/// (lower after an OSp reduction).
struct CHIdentity {
  int p = 0;
  int q = 0;
  bool osp = false;
  std::uint64_t base_weight = 0;
  std::vector<SPoly> coeffs;

  int n() const { return p + q; }
  int num_symbols() const { return p + q; }

  friend bool operator==(const CHIdentity& a, const CHIdentity& b) {
    return a.p == b.p && a.q == b.q && a.coeffs == b.coeffs;
  }
};

/// Coefficients b_0..b_count of exp(-sum S_i t^i / i), from the recursion
/// j b_j = -sum_{i=1..j} S_i b_{j-i}, b_0 = 1. Symbols beyond S_n are
/// treated as absent.
inline std::vector<SPoly> newton_coeffs(int n, int count) {
  if (n < 0 || count < 0) throw Error("newton_coeffs needs n >= 0 and count >= 0");
  std::vector<SPoly> b;
  b.reserve(static_cast<std::size_t>(count) + 1);
  b.emplace_back(n, Rational(1));
  for (int j = 1; j <= count; ++j) {
    SPoly sum(n);
    for (int i = 1; i <= std::min(j, n); ++i)
      sum += SPoly::symbol(n, i) * b[static_cast<std::size_t>(j - i)];
    b.push_back(Rational(-1, j) * sum);
  }
  return b;
}

struct BMatrix {
  int p = 0;
  int q = 0;
  Matrix<SPoly> entries;
};

namespace detail {

/// q x q Toeplitz matrix with entry (i, j) = b_{p+i-j} (1-based), b_0 = 1 and
/// b_k = 0 for k < 0. No restriction on q relative to p.
inline BMatrix toeplitz_b(int p, int q, const std::vector<SPoly>& b) {
  const auto uq = static_cast<std::size_t>(q);
  BMatrix out{p, q, Matrix<SPoly>(uq, uq)};
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) {
      const int k = p + i - j;
      out.entries(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          k < 0 ? SPoly(p + q) : b[static_cast<std::size_t>(k)];
    }
  return out;
}

/// Everything the generating function needs for one (p, q).
struct Construction {
  int p = 0;
  int q = 0;
  std::vector<SPoly> newton;        // b_0 .. b_{p+q} of the (p+q, 0) case
  BMatrix b;
  SPoly det_b;
  std::vector<SPoly> mu_numerators;  // mu_k = mu_numerators[k-1] / det_b
};

inline Construction construct(int p, int q) {
  const int n = p + q;
  Construction c{p, q, newton_coeffs(n, n), {}, {}, {}};
  c.b = toeplitz_b(p, q, c.newton);
  c.det_b = det(c.b.entries).with_symbols(n);
  if (c.det_b.is_zero()) throw ConjectureViolation("B matrix is singular for formal symbols");
  const auto adj = adjugate(c.b.entries);
  for (int k = 0; k < q; ++k) {
    SPoly num(n);
    for (int i = 0; i < q; ++i)
      num += adj(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) *
             c.newton[static_cast<std::size_t>(p + 1 + i)];
    c.mu_numerators.push_back(num);
  }
  return c;
}

/// Scales so the graded-lex leading term of the first nonzero coefficient is
/// +1. For generic identities this is the S1^(2pq) coefficient of a_0.
inline void normalize(std::vector<SPoly>& coeffs) {
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    const Rational s = 1 / c.leading_coeff();
    for (auto& x : coeffs) x = s * x;
    return;
  }
}

/// a_j = det(B)^2 [t^j] (1 - sum mu_k t^k)^2 G(t), before normalization.
inline std::vector<SPoly> scaled_coefficients(const Construction& c) {
  const int n = c.p + c.q;
  const auto order = static_cast<std::size_t>(n);
  TruncSeries<SRational> g(order);
  for (std::size_t j = 0; j <= order; ++j) g[j] = SRational(c.newton[j]);
  TruncSeries<SRational> one_minus(order);
  one_minus[0] = SRational(SPoly(n, Rational(1)));
  for (int k = 1; k <= c.q && k <= n; ++k)
    one_minus[static_cast<std::size_t>(k)] = SRational(-c.mu_numerators[static_cast<std::size_t>(k - 1)], c.det_b);
  const auto f = one_minus.square() * g;

  const SPoly scale = c.det_b * c.det_b;
  std::vector<SPoly> out;
  for (std::size_t j = 0; j <= order; ++j) {
    auto a = try_divide_exact(f[j].num() * scale, f[j].den());
    if (!a)
      throw ConjectureViolation("coefficient of t^" + std::to_string(j) +
                                " is not a polynomial after scaling by det(B)^2");
    out.push_back(a->with_symbols(n));
  }
  return out;
}

inline CHIdentity finish(int p, int q, std::vector<SPoly> coeffs) {
  normalize(coeffs);
  CHIdentity id{p, q, false, static_cast<std::uint64_t>(2 * p * q), std::move(coeffs)};
  return id;
}

/// Generating-function route without the q <= p restriction.
inline CHIdentity identity_coeffs_direct(int p, int q) {
  if (q == 0) {
    auto b = newton_coeffs(p, p);
    return finish(p, 0, std::move(b));
  }
  return finish(p, q, scaled_coefficients(construct(p, q)));
}

}  // namespace detail

inline BMatrix build_B(int p, int q) {
  if (p < 1 || q < 1) throw Error("build_B needs p, q >= 1");
  if (q > p) throw Error("q > p: use sign-flip dual");
  return detail::toeplitz_b(p, q, newton_coeffs(p + q, p + q));
}

/// mu_k as unreduced rational functions with denominator det(B).
inline std::vector<SRational> solve_mu(int p, int q) {
  build_B(p, q);
  const auto c = detail::construct(p, q);
  std::vector<SRational> mu;
  for (const auto& num : c.mu_numerators) mu.emplace_back(num, c.det_b);
  return mu;
}

/// Swaps (p, q), substitutes Sj -> -Sj and renormalizes.
inline CHIdentity flip_signs(const CHIdentity& id) {
  CHIdentity out{id.q, id.p, id.osp, id.base_weight, {}};
  for (const auto& c : id.coeffs) out.coeffs.push_back(flip_signs(c));
  detail::normalize(out.coeffs);
  return out;
}

/// The (p, q) identity, normalized so a_0 has S1^(2pq) coefficient +1.
/// q > p is obtained from (q, p) by the sign flip.
inline CHIdentity identity_coeffs(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) throw Error("identity needs p, q >= 0 and p + q >= 1");
  if (q > p) return flip_signs(identity_coeffs(q, p));
  return detail::identity_coeffs_direct(p, q);
}

/// det(B) for (p, q), sign-flipped for q > p. Divides a_1 and squares to a_0
/// up to normalization.
inline SPoly leading_factor(int p, int q) {
  if (q == 0 || p == 0) return SPoly(p + q, Rational(1));
  if (q > p) return flip_signs(leading_factor(q, p));
  return detail::construct(p, q).det_b;
}

/// Restriction to supermatrices whose odd-power supertraces vanish: drops
/// S1, S3, ..., then removes the common polynomial factor. The factor search
/// divides out the monomial content, then repeatedly probes the square root
/// of the leading coefficient and the leading coefficient itself.
inline CHIdentity osp_specialize(const CHIdentity& id) {
  CHIdentity out{id.p, id.q, true, 0, {}};
  bool any = false;
  for (const auto& c : id.coeffs) {
    out.coeffs.push_back(zero_symbols(c, [](int j) { return j % 2 == 0; }));
    any = any || !out.coeffs.back().is_zero();
  }
  if (!any) throw Error("vacuous OSp identity: every coefficient vanishes");

  const int n = id.n();
  const Monomial content = monomial_content(out.coeffs);
  if (!content.is_one()) {
    const SPoly divisor = SPoly::monomial(n, content, Rational(1));
    for (auto& c : out.coeffs) c = divide_exact(c, divisor);
  }

  auto divides_all = [&](const SPoly& g) {
    std::vector<SPoly> quotients;
    for (const auto& c : out.coeffs) {
      auto qt = try_divide_exact(c, g);
      if (!qt) return false;
      quotients.push_back(std::move(*qt));
    }
    out.coeffs = std::move(quotients);
    return true;
  };

  while (true) {
    const SPoly* lead = nullptr;
    for (const auto& c : out.coeffs)
      if (!c.is_zero()) {
        lead = &c;
        break;
      }
    const SPoly monic = Rational(1 / lead->leading_coeff()) * *lead;
    if (monic.is_constant()) break;
    auto root = try_sqrt(monic);
    if (root && !root->is_constant() && divides_all(*root)) continue;
    if (divides_all(monic)) continue;
    break;
  }
  detail::normalize(out.coeffs);
  for (const auto& c : out.coeffs)
    if (!c.is_zero()) {
      out.base_weight = weighted_degree(c).max;
      break;
    }
  return out;
}

/// Matrix-polynomial factors of degrees p and q whose product is the identity.
/// Coefficient lists run from the highest power of M down to I.
struct Factorization {
  std::vector<SPoly> left;   // degree p
  std::vector<SPoly> right;  // degree q
};

/// Coefficient-wise convolution, i.e. the product of two matrix polynomials
/// with central coefficients.
inline std::vector<SPoly> convolve(const std::vector<SPoly>& a, const std::vector<SPoly>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<SPoly> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

namespace detail {

/// Degree-p factor: [t^0..t^p] of (det B - sum N_k t^k) G(t).
/// Degree-q factor: (det B, -N_1, ..., -N_q).
inline Factorization factors_from_construction(const Construction& c) {
  const int n = c.p + c.q;
  Factorization f;
  f.right.push_back(c.det_b);
  for (const auto& nk : c.mu_numerators) f.right.push_back(-nk);
  for (int j = 0; j <= c.p; ++j) {
    SPoly cj = c.det_b * c.newton[static_cast<std::size_t>(j)];
    for (int k = 1; k <= std::min(j, c.q); ++k)
      cj -= c.mu_numerators[static_cast<std::size_t>(k - 1)] * c.newton[static_cast<std::size_t>(j - k)];
    f.left.push_back(cj.with_symbols(n));
  }
  return f;
}

}  // namespace detail

/// Splits the identity into factors of degrees p and q. The two factors are
/// the reversed generating polynomials (1 - sum mu_k t^k) and
/// (1 - sum mu_k t^k) G(t), cleared of det(B) and normalized to leading
/// term +1. Returns nullopt when the product does not reproduce id exactly.
inline std::optional<Factorization> factorize_small(const CHIdentity& id) {
  if (id.osp || id.p < 1 || id.q < 1) return std::nullopt;
  Factorization f;
  if (id.q <= id.p) {
    f = detail::factors_from_construction(detail::construct(id.p, id.q));
  } else {
    const auto base = detail::factors_from_construction(detail::construct(id.q, id.p));
    for (const auto& c : base.right) f.left.push_back(flip_signs(c));
    for (const auto& c : base.left) f.right.push_back(flip_signs(c));
  }
  detail::normalize(f.left);
  detail::normalize(f.right);
  if (convolve(f.left, f.right) != id.coeffs) return std::nullopt;
  return f;
}

/// Convenience wrapper used by the CLI: the generic identity, or its OSp
/// reduction (q must be even).
inline CHIdentity derive(int p, int q, bool osp) {
  if (p < 1 || q < 1) throw Error("p and q must both be at least 1");
  if (osp && q % 2 != 0) throw Error("OSp(p|q) needs even q");
  CHIdentity id = identity_coeffs(p, q);
  return osp ? osp_specialize(id) : id;
}

}  // namespace superch
