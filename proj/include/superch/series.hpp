#pragma once

// Rational functions of the supertrace symbols and truncated power series in
// the formal variable t.

#include <cstddef>
#include <utility>
#include <vector>

#include "superch/errors.hpp"
#include "superch/spoly.hpp"

namespace superch {

/// numerator / denominator, not reduced to lowest terms. Sums whose
/// denominators divide one another are lifted to the larger denominator, so
/// expressions built from powers of one denominator stay compact.
class SRational {
 public:
  SRational() : num_(), den_(Rational(1)) {}
  SRational(SPoly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT
  SRational(const Rational& c) : SRational(SPoly(c)) {}               // NOLINT
  SRational(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
  }

  const SPoly& num() const { return num_; }
  const SPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  SRational operator-() const { return SRational(-num_, den_); }

  friend SRational operator+(const SRational& a, const SRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return SRational(a.num_ + b.num_, a.den_);
    if (auto q = try_divide_exact(b.den_, a.den_)) return SRational(a.num_ * *q + b.num_, b.den_);
    if (auto q = try_divide_exact(a.den_, b.den_)) return SRational(a.num_ + b.num_ * *q, a.den_);
    return SRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend SRational operator-(const SRational& a, const SRational& b) { return a + (-b); }
  friend SRational operator*(const SRational& a, const SRational& b) {
    if (a.is_zero() || b.is_zero()) return SRational(SPoly(common_n(a.num_, b.num_)));
    return SRational(a.num_ * b.num_, a.den_ * b.den_);
  }

  /// Cross-multiplied equality.
  friend bool operator==(const SRational& a, const SRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// The polynomial equal to this function, if the division is exact.
  std::optional<SPoly> as_polynomial() const { return try_divide_exact(num_, den_); }

 private:
  SPoly num_;
  SPoly den_;
};

inline bool is_zero(const SRational& r) { return r.is_zero(); }

/// c_0 + c_1 t + ... + c_T t^T; arithmetic discards powers above T.
template <typename C>
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : c_(order + 1) {}
  TruncSeries(std::size_t order, std::vector<C> coeffs) : c_(order + 1) {
    if (coeffs.size() > c_.size()) coeffs.resize(c_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  C& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<C>& coeffs() const { return c_; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_order(a, b);
    TruncSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }

  /// Cauchy product truncated at the common order.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_order(a, b);
    TruncSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) {
        if (detail::ring_is_zero(b.c_[j])) continue;
        out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  TruncSeries square() const { return *this * *this; }

  TruncSeries scaled(const C& s) const {
    TruncSeries out(order());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = s * c_[i];
    return out;
  }

 private:
  static void check_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw DimensionError("series of different truncation order");
  }
  std::vector<C> c_;
};

}  // namespace superch
