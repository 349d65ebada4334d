#pragma once

// Univariate polynomials in a central variable x with coefficients in a
// (possibly non-commutative) ring T. Coefficient products keep their order.

#include <cstddef>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "superch/exterior_algebra.hpp"
#include "superch/rational.hpp"

namespace superch {

template <typename T>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c) requires(!std::is_same_v<T, Rational>) : UniPoly(T(c)) {}  // NOLINT
  UniPoly(T constant) {                          // NOLINT
    c_.push_back(std::move(constant));
    trim();
  }
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// x^k.
  static UniPoly x_power(std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = T(Rational(1));
    return UniPoly(std::move(c));
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  const T& leading() const { return c_.back(); }

  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Highest power first, e.g. "x^2 + (-3)*x + (2 + t1t2)".
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (detail::ring_is_zero(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      const bool unit = c_[k] == T(Rational(1));
      if (k == 0 || !unit) os << "(" << element_str(c_[k]) << ")";
      if (k > 0 && !unit) os << "*";
      if (k > 0) os << "x";
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  static std::string element_str(const T& v) {
    if constexpr (requires { v.str(); }) return v.str();
    else return v.get_str();
  }

  void trim() {
    while (!c_.empty() && detail::ring_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <typename T>
bool is_zero(const UniPoly<T>& p) {
  return p.is_zero();
}

template <typename T>
UniPoly<T> pow(const UniPoly<T>& base, unsigned k) {
  UniPoly<T> out(Rational(1));
  for (unsigned i = 0; i < k; ++i) out *= base;
  return out;
}

/// Polynomials over the even Grassmann subring.
using GrassmannPoly = UniPoly<Multivector>;

inline bool commutes(const Rational&) { return true; }
inline bool commutes(const Multivector& m) { return m.is_even(); }
template <typename T>
bool commutes(const UniPoly<T>& p) {
  for (const auto& c : p.coeffs())
    if (!commutes(c)) return false;
  return true;
}

}  // namespace superch
