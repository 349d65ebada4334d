#pragma once

// (p,q) supermatrices over the Grassmann algebra:
//
//     M = | A  B |   A: p x p even,  B: p x q odd
//         | C  D |   C: q x p odd,   D: q x q even

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superch/errors.hpp"
#include "superch/exterior_algebra.hpp"
#include "superch/matrix.hpp"
#include "superch/unipoly.hpp"

namespace superch {

using EvenMatrix = Matrix<Multivector>;

class SuperMatrix {
 public:
  SuperMatrix() = default;

  /// Validates the block parity pattern; the error names the offending entry.
  SuperMatrix(int p, int q, int num_generators, Matrix<Multivector> entries)
      : p_(p), q_(q), n_(num_generators), m_(std::move(entries)) {
    if (p < 0 || q < 0) throw DimensionError("negative block size");
    const auto size = static_cast<std::size_t>(p + q);
    if (m_.rows() != size || m_.cols() != size)
      throw DimensionError("entries must be " + std::to_string(size) + "x" + std::to_string(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const Multivector& e = m_(i, j);
        if (e.num_generators() != 0 && e.num_generators() != n_)
          throw DimensionError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") uses " + std::to_string(e.num_generators()) + " generators, expected " +
                               std::to_string(n_));
        for (const auto& t : e.terms())
          if (t.blade.max_index() > n_)
            throw DimensionError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") uses a generator beyond N");
        const bool odd_block = in_even_rows(i) != in_even_rows(j);
        if (odd_block ? !e.is_odd() : !e.is_even())
          throw ParityError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") in block " + block_name(i, j) + " must be " +
                            (odd_block ? "odd" : "even"));
      }
  }

  static SuperMatrix identity(int p, int q, int num_generators) {
    return SuperMatrix(p, q, num_generators,
                       Matrix<Multivector>::identity(static_cast<std::size_t>(p + q)));
  }

  int p() const { return p_; }
  int q() const { return q_; }
  int size() const { return p_ + q_; }
  int num_generators() const { return n_; }
  const Matrix<Multivector>& entries() const { return m_; }
  const Multivector& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Matrix<Multivector> A() const { return m_.block(0, 0, up(p_), up(p_)); }
  Matrix<Multivector> B() const { return m_.block(0, up(p_), up(p_), up(q_)); }
  Matrix<Multivector> C() const { return m_.block(up(p_), 0, up(q_), up(p_)); }
  Matrix<Multivector> D() const { return m_.block(up(p_), up(p_), up(q_), up(q_)); }

  static SuperMatrix from_blocks(int num_generators, const Matrix<Multivector>& a,
                                 const Matrix<Multivector>& b, const Matrix<Multivector>& c,
                                 const Matrix<Multivector>& d) {
    const auto p = a.rows();
    const auto q = d.rows();
    Matrix<Multivector> m(p + q, p + q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) m(i, p + j) = b(i, j);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < p; ++j) m(p + i, j) = c(i, j);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) m(p + i, p + j) = d(i, j);
    return SuperMatrix(static_cast<int>(p), static_cast<int>(q), num_generators, std::move(m));
  }

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.p_ != b.p_ || a.q_ != b.q_) throw DimensionError("supermatrix block sizes differ");
    if (a.n_ != b.n_) throw DimensionError("supermatrices over different generator counts");
    return SuperMatrix(a.p_, a.q_, a.n_, a.m_ * b.m_);
  }
  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.p_ != b.p_ || a.q_ != b.q_) throw DimensionError("supermatrix block sizes differ");
    return SuperMatrix(a.p_, a.q_, a.n_, a.m_ + b.m_);
  }
  /// Scaling by an even element.
  friend SuperMatrix operator*(const Multivector& s, const SuperMatrix& a) {
    if (!s.is_even()) throw ParityError("supermatrix scaled by a non-even element");
    return SuperMatrix(a.p_, a.q_, a.n_, s * a.m_);
  }
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.m_ == b.m_;
  }

  bool is_zero() const { return m_.is_zero(); }

 private:
  static std::size_t up(int v) { return static_cast<std::size_t>(v); }
  bool in_even_rows(std::size_t i) const { return i < up(p_); }
  std::string block_name(std::size_t i, std::size_t j) const {
    if (in_even_rows(i)) return in_even_rows(j) ? "A" : "B";
    return in_even_rows(j) ? "C" : "D";
  }

  int p_ = 0;
  int q_ = 0;
  int n_ = 0;
  Matrix<Multivector> m_;
};

/// tr(A) - tr(D).
inline Multivector supertrace(const SuperMatrix& m) {
  Multivector s(m.num_generators());
  for (int i = 0; i < m.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (i < m.p()) s += m(k, k);
    else s -= m(k, k);
  }
  return s;
}

inline SuperMatrix mat_pow(const SuperMatrix& m, unsigned k) {
  SuperMatrix out = SuperMatrix::identity(m.p(), m.q(), m.num_generators());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

/// M^0 .. M^k.
inline std::vector<SuperMatrix> mat_powers(const SuperMatrix& m, unsigned k) {
  std::vector<SuperMatrix> out{SuperMatrix::identity(m.p(), m.q(), m.num_generators())};
  for (unsigned i = 0; i < k; ++i) out.push_back(out.back() * m);
  return out;
}

/// Block rule [[A,B],[C,D]] -> [[A^t, -C^t], [-B^t, -D^t]].
inline SuperMatrix supertranspose(const SuperMatrix& m) {
  return SuperMatrix::from_blocks(m.num_generators(), m.A().transpose(), -m.C().transpose(),
                                  -m.B().transpose(), -m.D().transpose());
}

/// Bodies of the entries.
inline Matrix<Rational> body_matrix(const Matrix<Multivector>& m) {
  return m.map([](const Multivector& e) { return e.body(); });
}

/// det(xI - E) over a commutative coefficient ring.
template <typename T>
UniPoly<T> char_poly(const Matrix<T>& e) {
  const std::size_t n = e.rows();
  Matrix<UniPoly<T>> shifted(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      shifted(i, j) = UniPoly<T>(T(-e(i, j)));
      if (i == j) shifted(i, j) += UniPoly<T>::x_power(1);
    }
  return det(shifted);
}

/// Resultant of two polynomials over Q via the Sylvester determinant.
inline Rational resultant(const UniPoly<Rational>& f, const UniPoly<Rational>& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  if (m == 0 && n == 0) return 1;
  Matrix<Rational> s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coeffs()[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coeffs()[n - k];
  return det_rational(std::move(s));
}

/// True when the body spectra of A and D share an eigenvalue, detected as a
/// vanishing resultant of the body characteristic polynomials.
inline bool check_degenerate(const SuperMatrix& m) {
  if (m.p() == 0 || m.q() == 0) return false;
  const auto a = char_poly(body_matrix(m.A()));
  const auto d = char_poly(body_matrix(m.D()));
  return is_zero(resultant(a, d));
}

/// Deterministic sampler. Uses raw mt19937_64 output so streams are identical
/// across standard library implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi].
  long int_in(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  long nonzero_in(long lo, long hi) {
    long v = 0;
    while (v == 0) v = int_in(lo, hi);
    return v;
  }

  /// Uniformly chosen subset of {1..n} with k elements.
  Blade subset(int n, int k) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i) {
      const auto j = static_cast<std::size_t>(int_in(i, n - 1));
      std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
    }
    std::uint32_t mask = 0;
    for (int i = 0; i < k; ++i) mask |= std::uint32_t{1} << (idx[static_cast<std::size_t>(i)] - 1);
    return Blade::from_mask(mask);
  }

  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct SampleOptions {
  int num_generators = 6;
  int max_soul_grade = 3;
  int body_range = 9;   // bodies uniform over [-body_range, body_range]
  int soul_range = 3;   // soul coefficients uniform over [-soul_range, soul_range] \ {0}
  int max_retries = 1000;
};

namespace detail {

inline Multivector random_graded(SampleRng& rng, const SampleOptions& o, int parity, long terms) {
  Multivector e(o.num_generators);
  std::vector<int> grades;
  for (int g = parity == 0 ? 2 : 1; g <= std::min(o.max_soul_grade, o.num_generators); g += 2)
    grades.push_back(g);
  if (grades.empty()) return e;
  for (long t = 0; t < terms; ++t) {
    const int g = grades[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(grades.size()) - 1))];
    e.add_term(rng.subset(o.num_generators, g), Rational(rng.nonzero_in(-o.soul_range, o.soul_range)));
  }
  return e;
}

inline Multivector random_even(SampleRng& rng, const SampleOptions& o) {
  Multivector e = random_graded(rng, o, 0, rng.int_in(0, 2));
  e.add_term(Blade{}, Rational(rng.int_in(-o.body_range, o.body_range)));
  return e;
}

inline Multivector random_odd(SampleRng& rng, const SampleOptions& o) {
  return random_graded(rng, o, 1, rng.int_in(1, 2));
}

inline void check_options(const SampleOptions& o) {
  if (o.num_generators < 1 || o.num_generators > kMaxGenerators)
    throw Error("generator count must be in [1, " + std::to_string(kMaxGenerators) + "]");
  if (o.max_soul_grade < 0 || o.max_soul_grade > o.num_generators)
    throw Error("soul grade must be in [0, N]");
}

}  // namespace detail

/// Random (p,q) supermatrix with distinct A/D body spectra. Deterministic in
/// the seed; resamples until the nondegeneracy check passes.
inline SuperMatrix random_supermatrix(int p, int q, std::uint64_t seed, const SampleOptions& o = {}) {
  detail::check_options(o);
  if (p < 0 || q < 0 || p + q == 0) throw DimensionError("need p, q >= 0 and p + q >= 1");
  SampleRng rng(seed);
  const auto n = static_cast<std::size_t>(p + q);
  for (int attempt = 0; attempt < o.max_retries; ++attempt) {
    Matrix<Multivector> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool even = (i < static_cast<std::size_t>(p)) == (j < static_cast<std::size_t>(p));
        m(i, j) = even ? detail::random_even(rng, o) : detail::random_odd(rng, o);
      }
    SuperMatrix s(p, q, o.num_generators, std::move(m));
    if (!check_degenerate(s)) return s;
  }
  throw Error("could not generate nondegenerate sample");
}

/// Standard antisymmetric form [[0, I], [-I, 0]] of even size.
inline Matrix<Multivector> symplectic_form(int q) {
  if (q % 2 != 0) throw Error("no symplectic form in odd dimension " + std::to_string(q));
  const auto h = static_cast<std::size_t>(q / 2);
  Matrix<Multivector> j(2 * h, 2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    j(i, h + i) = Multivector(Rational(1));
    j(h + i, i) = Multivector(Rational(-1));
  }
  return j;
}

/// Graded antisymmetric Z with A + A^t = 0, D = D^t, B = C^t.
inline SuperMatrix random_graded_antisymmetric(int p, int q, SampleRng& rng, const SampleOptions& o) {
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);
  Matrix<Multivector> a(up, up), d(uq, uq), c(uq, up);
  for (std::size_t i = 0; i < up; ++i)
    for (std::size_t j = i + 1; j < up; ++j) {
      a(i, j) = detail::random_even(rng, o);
      a(j, i) = -a(i, j);
    }
  for (std::size_t i = 0; i < uq; ++i)
    for (std::size_t j = i; j < uq; ++j) {
      d(i, j) = detail::random_even(rng, o);
      d(j, i) = d(i, j);
    }
  for (std::size_t i = 0; i < uq; ++i)
    for (std::size_t j = 0; j < up; ++j) c(i, j) = detail::random_odd(rng, o);
  return SuperMatrix::from_blocks(o.num_generators, a, c.transpose(), c, d);
}

/// Omega = diag(1_p, J).
inline SuperMatrix osp_metric(int p, int q, int num_generators) {
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);
  return SuperMatrix::from_blocks(num_generators, Matrix<Multivector>::identity(up),
                                  Matrix<Multivector>(up, uq), Matrix<Multivector>(uq, up),
                                  symplectic_form(q));
}

struct OspSample {
  SuperMatrix z;      // graded antisymmetric, covariant indices
  SuperMatrix omega;  // diag(1, J)
  SuperMatrix m;      // Omega * Z
};

/// Random OSp(p|q) supermatrix M = Omega Z with nondegenerate body spectra.
inline OspSample osp_random_sample(int p, int q, std::uint64_t seed, const SampleOptions& o = {}) {
  detail::check_options(o);
  if (q % 2 != 0) throw Error("no symplectic form for odd q = " + std::to_string(q));
  if (p < 0 || q < 0 || p + q == 0) throw DimensionError("need p, q >= 0 and p + q >= 1");
  SampleRng rng(seed);
  const SuperMatrix omega = osp_metric(p, q, o.num_generators);
  for (int attempt = 0; attempt < o.max_retries; ++attempt) {
    SuperMatrix z = random_graded_antisymmetric(p, q, rng, o);
    SuperMatrix m = omega * z;
    if (!check_degenerate(m)) return {std::move(z), omega, std::move(m)};
  }
  throw Error("could not generate nondegenerate sample");
}

inline SuperMatrix osp_random(int p, int q, std::uint64_t seed, const SampleOptions& o = {}) {
  return osp_random_sample(p, q, seed, o).m;
}

}  // namespace superch
