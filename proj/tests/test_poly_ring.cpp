#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace superch;

namespace {

SPoly P(const std::string& s, int n = 4) { return parse_spoly(s, n); }

SPoly random_poly(std::mt19937_64& rng, int n, int terms, int max_exp) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<std::uint32_t> e(0, static_cast<std::uint32_t>(max_exp));
  SPoly p(n);
  for (int k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(n));
    for (auto& x : exps) x = e(rng);
    p.add_term(Monomial(exps), Rational(c(rng)));
  }
  return p;
}

}  // namespace

TEST(Monomial, DegreesAndDivision) {
  const Monomial m({2, 0, 1});  // S1^2 S3
  EXPECT_EQ(m.degree(), 3u);
  EXPECT_EQ(m.weighted_degree(), 5u);
  EXPECT_EQ(m.max_symbol(), 3);
  EXPECT_TRUE(Monomial({1}).divides(m));
  EXPECT_FALSE(Monomial({0, 1}).divides(m));
  EXPECT_EQ(m / Monomial({1}), Monomial({1, 0, 1}));
  EXPECT_EQ(Monomial::gcd(m, Monomial({1, 4})), Monomial({1}));
  EXPECT_EQ(Monomial({1, 0, 0}), Monomial({1}));  // trailing zeros are trimmed
}

TEST(Monomial, GradedLexOrder) {
  EXPECT_TRUE(grlex_greater(Monomial({2}), Monomial({0, 1})));    // S1^2 > S2
  EXPECT_TRUE(grlex_greater(Monomial({1, 1}), Monomial({0, 2})));  // S1 S2 > S2^2
  EXPECT_TRUE(grlex_greater(Monomial({0, 0, 1}), Monomial{}));      // S3 > 1
  EXPECT_FALSE(grlex_greater(Monomial({1}), Monomial({1})));
}

TEST(SPoly, CanonicalString) {
  EXPECT_EQ(P("S2*(-1/2) + S1^2").str(), "S1^2 - 1/2*S2");
  EXPECT_EQ(P("-(S1+S2)^2").str(), "-S1^2 - 2*S1*S2 - S2^2");
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("3/6").str(), "1/2");
}

TEST(SPoly, ParseErrors) {
  EXPECT_THROW(P("S5"), ParseError);
  EXPECT_THROW(P("S0"), ParseError);
  EXPECT_THROW(P("S1/S2"), ParseError);
  EXPECT_THROW(P("S1/0"), ParseError);
  EXPECT_THROW(P("(S1"), ParseError);
  EXPECT_THROW(P("S1 +"), ParseError);
  EXPECT_THROW(P("x"), ParseError);
}

TEST(SPoly, RoundTripThroughText) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 30; ++k) {
    const auto p = random_poly(rng, 4, 6, 3);
    ASSERT_EQ(P(p.str()), p);
  }
}

TEST(SPoly, RingAxioms) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 30; ++k) {
    const auto a = random_poly(rng, 3, 4, 2);
    const auto b = random_poly(rng, 3, 4, 2);
    const auto c = random_poly(rng, 3, 4, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(SPoly, MismatchedSymbolCountsThrow) {
  EXPECT_THROW(SPoly::symbol(2, 1) + SPoly::symbol(3, 1), DimensionError);
  EXPECT_EQ(SPoly(Rational(2)) * SPoly::symbol(3, 1), P("2*S1", 3));
  EXPECT_THROW(SPoly::symbol(2, 1).with_symbols(0), Error);
}

TEST(SPoly, WeightedDegree) {
  EXPECT_EQ(weighted_degree(P("S1^2 + S2")), (DegreeRange{2, 2}));
  EXPECT_EQ(weighted_degree(P("S1 + S3")), (DegreeRange{1, 3}));
  EXPECT_TRUE(is_weighted_homogeneous(P("S1^4 - 4*S1*S3 + 3*S2^2"), 4));
  EXPECT_FALSE(is_weighted_homogeneous(P("S1 + S3"), 3));
  EXPECT_THROW(weighted_degree(SPoly(4)), Error);
}

TEST(SPoly, ExactDivision) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    const auto a = random_poly(rng, 4, 5, 2);
    const auto b = random_poly(rng, 4, 4, 2);
    if (b.is_zero()) continue;
    ASSERT_EQ(divide_exact(a * b, b), a);
  }
  EXPECT_EQ(divide_exact(P("S1^2 - S2^2"), P("S1 + S2")), P("S1 - S2"));
  EXPECT_THROW(divide_exact(P("S1^2 + S2"), P("S1")), NotDivisible);
  EXPECT_FALSE(try_divide_exact(P("S1 + 1"), P("S2")).has_value());
  EXPECT_THROW(try_divide_exact(P("S1"), SPoly(4)), Error);
}

TEST(SPoly, SquareRoot) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 40; ++k) {
    const auto a = random_poly(rng, 4, 4, 2);
    if (a.is_zero()) continue;
    const auto root = try_sqrt(a * a);
    ASSERT_TRUE(root.has_value()) << a.str();
    ASSERT_TRUE(*root == a || *root == -a);
    ASSERT_GT(sgn(root->leading_coeff()), 0);
  }
  EXPECT_EQ(try_sqrt(P("S1^2 + 2*S1*S2 + S2^2")), P("S1 + S2"));
  EXPECT_EQ(try_sqrt(P("9/4*S2^2")), P("3/2*S2"));
  EXPECT_FALSE(try_sqrt(P("S1^2 + S2")).has_value());
  EXPECT_FALSE(try_sqrt(P("2*S1^2")).has_value());
  EXPECT_FALSE(try_sqrt(P("-S1^2")).has_value());
  EXPECT_FALSE(try_sqrt(P("S1^2 + 1")).has_value());
}

TEST(SPoly, FlipSignsNegatesOddDegreeTerms) {
  EXPECT_EQ(flip_signs(P("S1^2 - S2 + S1*S3 + S4 + 5")), P("S1^2 + S2 + S1*S3 - S4 + 5"));
  const auto a = P("S1^3 - 2*S1*S2 + S3");
  EXPECT_EQ(flip_signs(flip_signs(a)), a);
}

TEST(SPoly, ZeroSymbolsAndContent) {
  auto even = [](int j) { return j % 2 == 0; };
  EXPECT_EQ(zero_symbols(P("S1^2 + S2^2 + S1*S4 - S4"), even), P("S2^2 - S4"));
  const std::vector<SPoly> v{P("S2^2*S1 + S2*S3"), P("S2^3")};
  EXPECT_EQ(monomial_content(v), Monomial({0, 1}));
}

TEST(SPoly, EvaluateAtRationals) {
  const std::vector<Rational> s{Rational(2), Rational(-1), Rational(1, 2)};
  EXPECT_EQ(evaluate<Rational>(P("S1^2*S2 - 4*S3 + 1", 3), s), Rational(-4 - 2 + 1));
  EXPECT_THROW(evaluate<Rational>(P("S4"), s), DimensionError);
}

TEST(SPoly, EvaluateIsAHomomorphism) {
  std::mt19937_64 rng(25);
  std::vector<Rational> s{Rational(3), Rational(-2, 3), Rational(5), Rational(1, 7)};
  for (int k = 0; k < 20; ++k) {
    const auto a = random_poly(rng, 4, 4, 2);
    const auto b = random_poly(rng, 4, 4, 2);
    ASSERT_EQ(evaluate<Rational>(a * b, s), evaluate<Rational>(a, s) * evaluate<Rational>(b, s));
    ASSERT_EQ(evaluate<Rational>(a + b, s), evaluate<Rational>(a, s) + evaluate<Rational>(b, s));
  }
}

TEST(Series, TruncatedProductMatchesFullProduct) {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 20; ++k) {
    std::vector<SPoly> a, b;
    for (int i = 0; i < 5; ++i) {
      a.push_back(random_poly(rng, 3, 2, 1));
      b.push_back(random_poly(rng, 3, 2, 1));
    }
    const auto full = convolve(a, b);
    const auto prod = TruncSeries<SPoly>(4, a) * TruncSeries<SPoly>(4, b);
    for (std::size_t i = 0; i <= 4; ++i) ASSERT_EQ(prod[i], full[i]);
  }
  EXPECT_THROW(TruncSeries<SPoly>(2) * TruncSeries<SPoly>(3), DimensionError);
}

TEST(Series, RationalFunctionArithmetic) {
  const SPoly d = P("S1 + S2");
  const SRational x(P("S1"), d);
  const SRational y(P("S2"), d);
  EXPECT_EQ((x + y).as_polynomial(), SPoly(Rational(1)));
  EXPECT_EQ(x * SRational(d), SRational(P("S1")));
  EXPECT_EQ(SRational(P("2*S1"), P("2*S2")), SRational(P("S1"), P("S2")));
  EXPECT_FALSE(SRational(P("S1"), P("S2")).as_polynomial().has_value());
  EXPECT_THROW(SRational(P("S1"), SPoly(4)), Error);
  // Denominators that divide one another are lifted, not multiplied.
  const SRational z = x + SRational(P("S3"), d * d);
  EXPECT_EQ(z.den(), d * d);
}

TEST(UniPoly, ArithmeticAndString) {
  using Q = UniPoly<Rational>;
  const Q x = Q::x_power(1);
  const Q p = x * x - Q(Rational(2));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((x - Q(Rational(1))) * (x + Q(Rational(1))), x * x - Q(Rational(1)));
  EXPECT_EQ(p.str(), "x^2 + (-2)");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(pow(x + Q(Rational(1)), 3), Q(std::vector<Rational>{1, 3, 3, 1}));
}

TEST(UniPoly, GrassmannCoefficients) {
  const Multivector t12 = Multivector::generator(2, 1) * Multivector::generator(2, 2);
  const GrassmannPoly f(std::vector<Multivector>{t12, Multivector(Rational(1))});  // x + t1t2
  const GrassmannPoly g = f * f;
  EXPECT_EQ(g.coeff(0), Multivector(2));  // (t1t2)^2 = 0
  EXPECT_EQ(g.coeff(1), Rational(2) * t12);
  EXPECT_EQ(g.degree(), 2);
}
