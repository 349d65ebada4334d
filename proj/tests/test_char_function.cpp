#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace superch;

namespace {

GrassmannPoly X() { return GrassmannPoly::x_power(1); }
GrassmannPoly K(const Multivector& m) { return GrassmannPoly(m); }
Multivector th(int n, int i) { return Multivector::generator(n, i); }

SuperMatrix block_diagonal(int p, int q, std::uint64_t seed) {
  const auto m = random_supermatrix(p, q, seed);
  return SuperMatrix::from_blocks(m.num_generators(), m.A(), Matrix<Multivector>(m.B().rows(), m.B().cols()),
                                  Matrix<Multivector>(m.C().rows(), m.C().cols()), m.D());
}

}  // namespace

TEST(CharPolyBlock, Examples) {
  Matrix<Multivector> one(1, 1);
  one(0, 0) = Multivector(Rational(5));
  EXPECT_EQ(char_poly_block(one), X() - K(Rational(5)));

  Matrix<Multivector> diag(2, 2);
  diag(0, 0) = Multivector(Rational(2)) + th(4, 1) * th(4, 2);
  diag(1, 1) = Multivector(Rational(-3));
  EXPECT_EQ(char_poly_block(diag), (X() - K(diag(0, 0))) * (X() - K(diag(1, 1))));

  Matrix<Multivector> rot(2, 2);
  rot(0, 1) = Multivector(Rational(1));
  rot(1, 0) = Multivector(Rational(-1));
  EXPECT_EQ(char_poly_block(rot), X() * X() + K(Rational(1)));

  Matrix<Multivector> odd(1, 1);
  odd(0, 0) = th(2, 1);
  EXPECT_THROW(char_poly_block(odd), ParityError);
}

TEST(RatioForms, OneOneByHand) {
  // M = [[a, b], [g, d]] with b, g odd: h_via_d = ((x-d)(x-a) - b g) / (x-d)^2,
  // h_via_a = (x-a)^2 / ((x-a)(x-d) - g b).
  const int n = 4;
  Matrix<Multivector> e(2, 2);
  e(0, 0) = Multivector(Rational(2)) + th(n, 3) * th(n, 4);
  e(0, 1) = th(n, 1);
  e(1, 0) = th(n, 2);
  e(1, 1) = Multivector(Rational(-1));
  const SuperMatrix m(1, 1, n, e);
  const auto xa = X() - K(e(0, 0));
  const auto xd = X() - K(e(1, 1));
  const auto fd = h_via_d(m);
  EXPECT_EQ(fd.numerator, xd * xa - K(e(0, 1) * e(1, 0)));
  EXPECT_EQ(fd.denominator, xd * xd);
  const auto fa = h_via_a(m);
  EXPECT_EQ(fa.numerator, xa * xa);
  EXPECT_EQ(fa.denominator, xa * xd - K(e(1, 0) * e(0, 1)));
  EXPECT_TRUE(ratio_forms_equal(fd, fa));
}

TEST(RatioForms, BlockDiagonalReducesToCharPolyRatio) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    const auto m = block_diagonal(p, q, 3);
    const auto a = char_poly_block(m.A());
    const auto d = char_poly_block(m.D());
    const auto fd = h_via_d(m);
    EXPECT_EQ(fd.numerator, a * pow(d, static_cast<unsigned>(p)));
    EXPECT_EQ(fd.denominator, pow(d, static_cast<unsigned>(p + 1)));
    const auto fa = h_via_a(m);
    EXPECT_EQ(fa.numerator, pow(a, static_cast<unsigned>(q + 1)));
    EXPECT_EQ(fa.denominator, pow(a, static_cast<unsigned>(q)) * d);
    const RatioForm plain{a, d, RatioVariant::ViaD};
    EXPECT_TRUE(ratio_forms_equal(fd, plain));
    EXPECT_TRUE(ratio_forms_equal(fa, plain));
    EXPECT_TRUE(check_equivalence(m));
  }
}

TEST(RatioForms, EquivalentOnRandomSamples) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p + q <= 5; ++q)
      for (std::uint64_t seed = 1; seed <= 3; ++seed)
        ASSERT_TRUE(check_equivalence(random_supermatrix(p, q, seed))) << p << "," << q;
}

TEST(RatioForms, CorruptedFormIsRejected) {
  const auto m = random_supermatrix(2, 1, 4);
  auto fd = h_via_d(m);
  fd.numerator += K(th(6, 1) * th(6, 2));
  EXPECT_FALSE(ratio_forms_equal(fd, h_via_a(m)));
}

TEST(RatioForms, Degrees) {
  // numerator p(q+1), denominator q(p+1) for the via-d form; mirrored for via-a
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 4; ++q) {
      const auto m = random_supermatrix(p, q, 8);
      const auto fd = h_via_d(m);
      EXPECT_EQ(fd.numerator.degree(), p * (q + 1));
      EXPECT_EQ(fd.denominator.degree(), q * (p + 1));
      const auto fa = h_via_a(m);
      EXPECT_EQ(fa.numerator.degree(), p * (q + 1));
      EXPECT_EQ(fa.denominator.degree(), q * (p + 1));
      EXPECT_EQ(fd.denominator.leading(), Multivector(Rational(1)));
      EXPECT_EQ(fa.denominator.leading(), Multivector(Rational(1)));
    }
}

TEST(RatioForms, OrdinaryMatrixEdgeCase) {
  const auto m = random_supermatrix(3, 0, 2);
  const auto fa = h_via_a(m);
  EXPECT_EQ(fa.denominator, K(Rational(1)));
  EXPECT_EQ(fa.numerator, char_poly_block(m.A()));
  EXPECT_TRUE(check_equivalence(m));
}

TEST(FullCharPoly, DiagonalOneOne) {
  Matrix<Multivector> e(2, 2);
  e(0, 0) = Multivector(Rational(2));
  e(1, 1) = Multivector(Rational(7));
  const auto poly = full_char_poly(SuperMatrix(1, 1, 3, e));
  const auto xa = X() - K(Rational(2));
  const auto xd = X() - K(Rational(7));
  EXPECT_EQ(poly, xa * xa * xd * xd);
}

TEST(FullCharPoly, DegreeAndMonic) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p + q <= 5; ++q) {
      const auto poly = full_char_poly(random_supermatrix(p, q, 12));
      ASSERT_EQ(poly.degree(), 2 * p * q + p + q);
      ASSERT_EQ(poly.leading(), Multivector(Rational(1)));
    }
  const auto m = random_supermatrix(3, 0, 1);
  EXPECT_EQ(full_char_poly(m), char_poly_block(m.A()));
}
