#pragma once

// Multivariate polynomials over Q in the formal supertrace symbols S1..Sn.
// Symbol Sj carries weight j, so a polynomial in the supertraces of M that is
// homogeneous of degree k in the entries of M has weighted degree k.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superch/errors.hpp"
#include "superch/rational.hpp"

namespace superch {

/// Exponent vector (e1, e2, ...) with trailing zeros trimmed.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { trim(); }

  /// Sj^power.
  static Monomial symbol(int j, std::uint32_t power = 1) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(j), 0);
    e[static_cast<std::size_t>(j - 1)] = power;
    return Monomial(std::move(e));
  }

  /// Exponent of S_j (1-based).
  std::uint32_t exponent(int j) const {
    auto idx = static_cast<std::size_t>(j - 1);
    return idx < e_.size() ? e_[idx] : 0;
  }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  /// Highest symbol index that occurs.
  int max_symbol() const { return static_cast<int>(e_.size()); }
  bool is_one() const { return e_.empty(); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  std::uint64_t weighted_degree() const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += (i + 1) * e_[i];
    return d;
  }

  bool divides(const Monomial& o) const {
    if (e_.size() > o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < a.e_.size(); ++i) e[i] += a.e_[i];
    for (std::size_t i = 0; i < b.e_.size(); ++i) e[i] += b.e_[i];
    return Monomial(std::move(e));
  }

  /// a / b; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e = a.e_;
    for (std::size_t i = 0; i < b.e_.size(); ++i) e[i] -= b.e_[i];
    return Monomial(std::move(e));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(std::min(a.e_.size(), b.e_.size()));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// S1 > S2 > ... . Returns true when a is strictly greater than b.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto n = std::max(a.max_symbol(), b.max_symbol());
  for (int j = 1; j <= n; ++j) {
    const auto ea = a.exponent(j);
    const auto eb = b.exponent(j);
    if (ea != eb) return ea > eb;
  }
  return false;
}

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// Polynomial in S1..Sn over Q. Terms iterate from the graded-lex leading
/// term downwards. num_symbols == 0 marks a constant compatible with any n.
class SPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  SPoly() = default;
  explicit SPoly(int num_symbols) : n_(num_symbols) {}
  SPoly(const Rational& c) {  // NOLINT: implicit constant embedding
    if (!superch::is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  SPoly(int num_symbols, const Rational& c) : SPoly(c) { n_ = num_symbols; }

  static SPoly symbol(int num_symbols, int j) {
    if (j < 1 || j > num_symbols) throw Error("symbol index out of range");
    SPoly p(num_symbols);
    p.terms_.emplace(Monomial::symbol(j), Rational(1));
    return p;
  }

  static SPoly monomial(int num_symbols, const Monomial& m, const Rational& c) {
    SPoly p(num_symbols);
    p.add_term(m, c);
    return p;
  }

  int num_symbols() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.max_symbol() > n_) throw Error("monomial uses a symbol beyond S" + std::to_string(n_));
    if (superch::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (superch::is_zero(it->second)) terms_.erase(it);
    }
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->first;
  }
  const Rational& leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->second;
  }

  SPoly operator-() const {
    SPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  SPoly& operator+=(const SPoly& o) {
    n_ = common_n(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SPoly& operator-=(const SPoly& o) {
    n_ = common_n(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SPoly& operator*=(const SPoly& o) { return *this = *this * o; }

  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }

  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly out(common_n(a, b));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend SPoly operator*(const Rational& s, const SPoly& a) {
    SPoly out(a.n_);
    if (superch::is_zero(s)) return out;
    out.terms_ = a.terms_;
    for (auto& [m, c] : out.terms_) c *= s;
    return out;
  }

  friend bool operator==(const SPoly& a, const SPoly& b) { return a.terms_ == b.terms_; }

  /// Declares the polynomial as living over n symbols (n >= highest used).
  SPoly with_symbols(int n) const {
    for (const auto& [m, c] : terms_)
      if (m.max_symbol() > n) throw Error("polynomial uses a symbol beyond S" + std::to_string(n));
    SPoly out = *this;
    out.n_ = n;
    return out;
  }

  /// Canonical text form in graded-lex order, e.g. "S1^2 - 1/2*S2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c0] : terms_) {
      Rational c = c0;
      if (first) {
        if (sgn(c) < 0) {
          os << "-";
          c = -c;
        }
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
        if (sgn(c) < 0) c = -c;
      }
      first = false;
      if (m.is_one()) {
        os << c.get_str();
        continue;
      }
      if (c != 1) os << c.get_str() << "*";
      bool first_sym = true;
      for (int j = 1; j <= m.max_symbol(); ++j) {
        const auto e = m.exponent(j);
        if (e == 0) continue;
        if (!first_sym) os << "*";
        first_sym = false;
        os << "S" << j;
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

  friend int common_n(const SPoly& a, const SPoly& b) {
    if (a.n_ == 0) return b.n_;
    if (b.n_ == 0 || a.n_ == b.n_) return a.n_;
    throw DimensionError("polynomials over " + std::to_string(a.n_) + " and " +
                         std::to_string(b.n_) + " symbols");
  }

 private:
  int n_ = 0;
  TermMap terms_;
};

inline bool is_zero(const SPoly& p) { return p.is_zero(); }
inline bool commutes(const SPoly&) { return true; }

inline SPoly pow(const SPoly& base, unsigned k) {
  SPoly out(base.num_symbols(), Rational(1));
  for (unsigned i = 0; i < k; ++i) out *= base;
  return out;
}

struct DegreeRange {
  std::uint64_t min;
  std::uint64_t max;
  bool homogeneous() const { return min == max; }
  friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// Min and max weighted degree over the terms; throws on the zero polynomial.
inline DegreeRange weighted_degree(const SPoly& p) {
  if (p.is_zero()) throw Error("weighted degree of the zero polynomial is undefined");
  DegreeRange r{~std::uint64_t{0}, 0};
  for (const auto& [m, c] : p.terms()) {
    const auto w = m.weighted_degree();
    r.min = std::min(r.min, w);
    r.max = std::max(r.max, w);
  }
  return r;
}

inline bool is_weighted_homogeneous(const SPoly& p, std::uint64_t degree) {
  for (const auto& [m, c] : p.terms())
    if (m.weighted_degree() != degree) return false;
  return true;
}

/// Exact multivariate division under graded-lex order. Returns the quotient
/// when the remainder is zero, nullopt otherwise.
inline std::optional<SPoly> try_divide_exact(const SPoly& a, const SPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  const int n = common_n(a, b);
  SPoly quotient(n);
  SPoly rem = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    SPoly t = SPoly::monomial(n, lr / lb, rem.leading_coeff() / cb);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

inline SPoly divide_exact(const SPoly& a, const SPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw NotDivisible("(" + a.str() + ") / (" + b.str() + ")");
  return *std::move(q);
}

/// Square root R with positive leading coefficient and R*R == a, if one
/// exists. Uses the leading-term recurrence under graded-lex order.
inline std::optional<SPoly> try_sqrt(const SPoly& a) {
  if (a.is_zero()) return SPoly(a.num_symbols());
  const int n = a.num_symbols();
  const Monomial& lead = a.leading_monomial();
  for (auto e : lead.exponents())
    if (e % 2 != 0) return std::nullopt;
  auto lead_c = exact_sqrt(a.leading_coeff());
  if (!lead_c) return std::nullopt;
  std::vector<std::uint32_t> half;
  for (auto e : lead.exponents()) half.push_back(e / 2);
  const SPoly root_lead = SPoly::monomial(n, Monomial(half), *lead_c);

  std::uint64_t min_degree = ~std::uint64_t{0};
  for (const auto& [m, c] : a.terms()) min_degree = std::min(min_degree, m.degree());

  SPoly root = root_lead;
  const SPoly twice_lead = Rational(2) * root_lead;
  while (true) {
    SPoly rem = a - root * root;
    if (rem.is_zero()) return root;
    const Monomial& lr = rem.leading_monomial();
    const Monomial& ll = twice_lead.leading_monomial();
    if (!ll.divides(lr)) return std::nullopt;
    const Monomial next = lr / ll;
    // Every monomial of a root has degree >= min_degree / 2.
    if (2 * next.degree() < min_degree) return std::nullopt;
    if (!grlex_greater(ll, next)) return std::nullopt;
    root += SPoly::monomial(n, next, rem.leading_coeff() / twice_lead.leading_coeff());
  }
}

/// Substitutes Sj -> -Sj: negates every term of odd total degree.
inline SPoly flip_signs(const SPoly& p) {
  SPoly out(p.num_symbols());
  for (const auto& [m, c] : p.terms()) out.add_term(m, (m.degree() % 2) ? Rational(-c) : c);
  return out;
}

/// Drops every term containing a symbol for which keep(j) is false, i.e.
/// substitutes zero for those symbols.
inline SPoly zero_symbols(const SPoly& p, const std::function<bool(int)>& keep) {
  SPoly out(p.num_symbols());
  for (const auto& [m, c] : p.terms()) {
    bool survives = true;
    for (int j = 1; j <= m.max_symbol() && survives; ++j)
      if (m.exponent(j) != 0 && !keep(j)) survives = false;
    if (survives) out.add_term(m, c);
  }
  return out;
}

/// Evaluates p at Sj = values[j-1] in any commutative ring T that embeds Q
/// through T(Rational). Powers of each value are cached.
template <typename T>
T evaluate(const SPoly& p, std::span<const T> values) {
  std::vector<std::vector<T>> powers(values.size());
  auto power_of = [&](int j, std::uint32_t e) -> const T& {
    auto& cache = powers[static_cast<std::size_t>(j - 1)];
    if (cache.empty()) cache.push_back(T(Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[static_cast<std::size_t>(j - 1)]);
    return cache[e];
  };
  T sum{};
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<std::size_t>(m.max_symbol()) > values.size())
      throw DimensionError("not enough values to evaluate " + p.str());
    T term(c);
    for (int j = 1; j <= m.max_symbol(); ++j)
      if (const auto e = m.exponent(j); e != 0) term = term * power_of(j, e);
    sum = sum + term;
  }
  return sum;
}

/// Greatest monomial dividing every term of every polynomial in the list.
inline Monomial monomial_content(std::span<const SPoly> polys) {
  std::optional<Monomial> g;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) g = g ? Monomial::gcd(*g, m) : m;
  return g.value_or(Monomial{});
}

}  // namespace superch
