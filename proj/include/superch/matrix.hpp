#pragma once

// Dense matrices over an arbitrary ring, with a division-free determinant
// and adjugate for commuting entries.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superch/errors.hpp"
#include "superch/rational.hpp"
#include "superch/unipoly.hpp"

namespace superch {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Rational(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!detail::ring_is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) out.a_[k] = a.a_[k] + b.a_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  /// Row-by-column product; entry factors keep their left/right order.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError(std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                           std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (detail::ring_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }

  /// Left scalar multiple s*M.
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) out.a_[k] = s * m.a_[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

template <typename T>
bool is_zero(const Matrix<T>& m) {
  return m.is_zero();
}

namespace detail {

template <typename T>
void require_commuting(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!commutes(m(i, j)))
        throw ParityError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") is not even");
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// still available: O(2^n * n) ring operations, no divisions.
template <typename T>
class CofactorDeterminant {
 public:
  explicit CofactorDeterminant(const Matrix<T>& m) : m_(m) {
    if (m.rows() > 24) throw DimensionError("cofactor determinant limited to 24x24");
  }

  T operator()() {
    const std::uint32_t all = m_.rows() == 0 ? 0u : ((std::uint32_t{1} << m_.rows()) - 1);
    return minor(all);
  }

  /// Determinant of the trailing rows restricted to the given columns.
  T minor(std::uint32_t cols) {
    const int k = std::popcount(cols);
    if (k == 0) return T(Rational(1));
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    const std::size_t row = m_.rows() - static_cast<std::size_t>(k);
    T sum{};
    int position = 0;
    for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1, ++position) {
      const int j = std::countr_zero(rest);
      const T& entry = m_(row, static_cast<std::size_t>(j));
      if (ring_is_zero(entry)) continue;
      const T sub = minor(cols & ~(std::uint32_t{1} << j));
      if (ring_is_zero(sub)) continue;
      if (position % 2 == 0) sum = sum + entry * sub;
      else sum = sum - entry * sub;
    }
    memo_.emplace(cols, sum);
    return sum;
  }

 private:
  const Matrix<T>& m_;
  std::unordered_map<std::uint32_t, T> memo_;
};

}  // namespace detail

/// Division-free determinant over a commutative ring. Entries must commute
/// pairwise (even Grassmann elements or polynomials over them).
template <typename T>
T det(const Matrix<T>& m) {
  detail::require_commuting(m);
  return detail::CofactorDeterminant<T>(m)();
}

/// Matrix with row i and column j removed.
template <typename T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t row, std::size_t col) {
  Matrix<T> out(m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

/// Transposed matrix of signed cofactors: adj(M) M = M adj(M) = det(M) I.
template <typename T>
Matrix<T> adjugate(const Matrix<T>& m) {
  detail::require_commuting(m);
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 0) return adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T c = detail::CofactorDeterminant<T>(minor_matrix(m, i, j))();
      adj(j, i) = ((i + j) % 2 == 0) ? c : T(-c);
    }
  return adj;
}

/// Determinant over a field by fraction-based elimination; only valid for
/// entries without zero divisors.
inline Rational det_rational(Matrix<Rational> m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m(pivot, c))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

}  // namespace superch
