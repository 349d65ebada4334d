#pragma once

// Exact arithmetic in the Grassmann algebra on N anticommuting generators
// theta_1..theta_N with rational coefficients.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superch/errors.hpp"
#include "superch/rational.hpp"

namespace superch {

/// Largest supported generator count. Blades are stored as bit masks.
inline constexpr int kMaxGenerators = 30;

/// A product theta_{i1} theta_{i2} ... with i1 < i2 < ..., stored as a bit
/// mask (bit i-1 set for generator i). The empty blade is the scalar 1.
class Blade {
 public:
  constexpr Blade() = default;

  /// Indices must be strictly increasing and lie in [1, kMaxGenerators].
  Blade(std::initializer_list<int> indices) : Blade(std::vector<int>(indices)) {}
  explicit Blade(const std::vector<int>& indices) {
    int prev = 0;
    for (int i : indices) {
      if (i <= prev) throw Error("blade indices must be strictly increasing");
      if (i > kMaxGenerators) throw Error("blade index exceeds supported generator count");
      mask_ |= std::uint32_t{1} << (i - 1);
      prev = i;
    }
  }

  static constexpr Blade from_mask(std::uint32_t mask) {
    Blade b;
    b.mask_ = mask;
    return b;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int grade() const { return std::popcount(mask_); }
  constexpr bool is_scalar() const { return mask_ == 0; }
  /// Highest generator index, 0 for the scalar blade.
  constexpr int max_index() const { return 32 - std::countl_zero(mask_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr bool operator==(Blade a, Blade b) { return a.mask_ == b.mask_; }
  friend constexpr auto operator<=>(Blade a, Blade b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

/// Sign of b1*b2 after reordering into canonical order: 0 if they share a
/// generator, otherwise (-1)^(number of transpositions).
constexpr int blade_sign(std::uint32_t a, std::uint32_t b) {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  for (std::uint32_t m = b; m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    const std::uint32_t above = j == 31 ? 0u : (~std::uint32_t{0} << (j + 1));
    swaps += std::popcount(a & above);
  }
  return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
  int sign;  // -1, 0 or +1
  Blade product;
};

inline BladeProduct blade_mul(Blade b1, Blade b2) {
  const int s = blade_sign(b1.mask(), b2.mask());
  if (s == 0) return {0, Blade{}};
  return {s, Blade::from_mask(b1.mask() | b2.mask())};
}

enum class Parity { Even, Odd, Mixed, Zero };

/// Element of the Grassmann algebra. Terms are kept sorted by blade mask with
/// no zero coefficients. An element with N = 0 is a pure rational and combines
/// with an element of any N.
class Multivector {
 public:
  struct Term {
    Blade blade;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Multivector() = default;
  explicit Multivector(int num_generators) : n_(checked_n(num_generators)) {}
  Multivector(const Rational& scalar) {  // NOLINT: implicit scalar embedding
    if (!superch::is_zero(scalar)) terms_.push_back({Blade{}, scalar});
  }
  Multivector(int num_generators, const Rational& scalar) : Multivector(scalar) {
    n_ = checked_n(num_generators);
  }
  Multivector(int num_generators, std::initializer_list<std::pair<Blade, Rational>> terms)
      : n_(checked_n(num_generators)) {
    for (const auto& [b, c] : terms) add_term(b, c);
  }

  static Multivector generator(int num_generators, int index) {
    return Multivector(num_generators, {{Blade{index}, Rational(1)}});
  }

  int num_generators() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * blade in place.
  void add_term(Blade blade, const Rational& c) {
    if (blade.max_index() > n_) throw Error("blade index exceeds generator count");
    if (superch::is_zero(c)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), blade,
                               [](const Term& t, Blade b) { return t.blade < b; });
    if (it != terms_.end() && it->blade == blade) {
      it->coeff += c;
      if (superch::is_zero(it->coeff)) terms_.erase(it);
    } else {
      terms_.insert(it, Term{blade, c});
    }
  }

  Rational coeff(Blade blade) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), blade,
                               [](const Term& t, Blade b) { return t.blade < b; });
    return (it != terms_.end() && it->blade == blade) ? it->coeff : Rational(0);
  }

  Rational body() const {
    return (!terms_.empty() && terms_.front().blade.is_scalar()) ? terms_.front().coeff
                                                                 : Rational(0);
  }

  Multivector soul() const {
    Multivector out(n_);
    for (const auto& t : terms_)
      if (!t.blade.is_scalar()) out.terms_.push_back(t);
    return out;
  }

  Parity parity() const {
    if (terms_.empty()) return Parity::Zero;
    const int first = terms_.front().blade.grade() & 1;
    for (const auto& t : terms_)
      if ((t.blade.grade() & 1) != first) return Parity::Mixed;
    return first ? Parity::Odd : Parity::Even;
  }
  /// Zero counts as both even and odd.
  bool is_even() const { auto p = parity(); return p == Parity::Even || p == Parity::Zero; }
  bool is_odd() const { auto p = parity(); return p == Parity::Odd || p == Parity::Zero; }

  Multivector operator-() const {
    Multivector out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
  Multivector& operator-=(const Multivector& o) { return *this = *this - o; }
  Multivector& operator*=(const Multivector& o) { return *this = *this * o; }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    Multivector out(common_n(a, b));
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->blade < j->blade)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->blade < i->blade) {
        out.terms_.push_back(*j++);
      } else {
        Rational c = i->coeff + j->coeff;
        if (!superch::is_zero(c)) out.terms_.push_back({i->blade, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    const int n = common_n(a, b);
    Multivector out(n);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (n <= kDenseLimit) {
      std::vector<Rational> acc(std::size_t{1} << n);
      std::vector<bool> touched(acc.size(), false);
      for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
          const int s = blade_sign(ta.blade.mask(), tb.blade.mask());
          if (s == 0) continue;
          const std::uint32_t m = ta.blade.mask() | tb.blade.mask();
          if (s > 0) acc[m] += ta.coeff * tb.coeff;
          else acc[m] -= ta.coeff * tb.coeff;
          touched[m] = true;
        }
      }
      for (std::uint32_t m = 0; m < acc.size(); ++m)
        if (touched[m] && !superch::is_zero(acc[m]))
          out.terms_.push_back({Blade::from_mask(m), std::move(acc[m])});
      return out;
    }
    std::map<std::uint32_t, Rational> acc;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        const int s = blade_sign(ta.blade.mask(), tb.blade.mask());
        if (s == 0) continue;
        Rational& slot = acc[ta.blade.mask() | tb.blade.mask()];
        if (s > 0) slot += ta.coeff * tb.coeff;
        else slot -= ta.coeff * tb.coeff;
      }
    }
    for (auto& [m, c] : acc)
      if (!superch::is_zero(c)) out.terms_.push_back({Blade::from_mask(m), std::move(c)});
    return out;
  }

  friend Multivector operator*(const Rational& s, const Multivector& a) {
    Multivector out(a.n_);
    if (superch::is_zero(s)) return out;
    out.terms_ = a.terms_;
    for (auto& t : out.terms_) t.coeff *= s;
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "3 + 2*t1t2 - t3".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      if (!first) {
        os << (sgn(c) < 0 ? " - " : " + ");
        if (sgn(c) < 0) c = -c;
      }
      first = false;
      if (t.blade.is_scalar()) {
        os << c.get_str();
        continue;
      }
      if (c == -1) os << "-";
      else if (c != 1) os << c.get_str() << "*";
      for (int i : t.blade.indices()) os << "t" << i;
    }
    return os.str();
  }

 private:
  static constexpr int kDenseLimit = 8;

  static int checked_n(int n) {
    if (n < 0 || n > kMaxGenerators) throw Error("generator count out of range");
    return n;
  }

  static int common_n(const Multivector& a, const Multivector& b) {
    if (a.n_ == 0) return b.n_;
    if (b.n_ == 0 || a.n_ == b.n_) return a.n_;
    throw DimensionError("multivectors over " + std::to_string(a.n_) + " and " +
                         std::to_string(b.n_) + " generators");
  }

  int n_ = 0;
  std::vector<Term> terms_;
};

inline bool is_zero(const Multivector& a) { return a.is_zero(); }
inline Rational body(const Multivector& a) { return a.body(); }
inline Multivector soul(const Multivector& a) { return a.soul(); }

/// Inverse of an even element with nonzero body, via the terminating
/// geometric series body^-1 * sum_k (-soul/body)^k.
inline Multivector even_inverse(const Multivector& a) {
  if (!a.is_even()) throw ParityError("inverse of a non-even element");
  const Rational b = a.body();
  if (is_zero(b)) throw NotInvertible("element has zero body");
  const Rational inv_b = 1 / b;
  const Multivector step = (-inv_b) * a.soul();
  Multivector power(a.num_generators(), Rational(1));
  Multivector sum(a.num_generators());
  while (!power.is_zero()) {
    sum += power;
    power = power * step;
  }
  return inv_b * sum;
}

}  // namespace superch
