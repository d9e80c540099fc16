#include "tepperlab/exact.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tepperlab;

TEST(Binomial, DocumentedValues) {
  EXPECT_EQ(binomial(0, 0), Natural(1));
  EXPECT_EQ(binomial(3, 2), Natural(3));
  ASSERT_EQ(oracle::count_subsets(5, 2), 10U);
  EXPECT_EQ(binomial(5, 2), Natural(10));
}

TEST(Binomial, KAboveNIsZero) {
  EXPECT_EQ(binomial(3, 4), Natural(0));
  EXPECT_EQ(binomial(0, 1), Natural(0));
}

TEST(Binomial, MatchesSubsetEnumeration) {
  for (unsigned n = 0; n <= 16; ++n) {
    for (unsigned k = 0; k <= n + 1; ++k) {
      EXPECT_EQ(binomial(n, k), Natural(oracle::count_subsets(n, k))) << n << " choose " << k;
    }
  }
}

TEST(Binomial, Symmetry) {
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n, n - k));
  }
}

TEST(Factorial, DocumentedValues) {
  EXPECT_EQ(factorial(0), Natural(1));
  EXPECT_EQ(factorial(3), Natural(6));
  ASSERT_EQ(oracle::to_string(oracle::factorial128(6)), "720");
  EXPECT_EQ(factorial(6), Natural(720));
}

TEST(Factorial, MatchesIteratedProduct) {
  for (unsigned n = 0; n <= 33; ++n) {
    EXPECT_EQ(factorial(n).to_string(), oracle::to_string(oracle::factorial128(n))) << n;
  }
}

TEST(PascalRow, DocumentedValues) {
  EXPECT_EQ(pascal_row(0), std::vector<Natural>{Natural(1)});
  EXPECT_EQ(pascal_row(3), (std::vector<Natural>{1, 3, 3, 1}));
  EXPECT_EQ(pascal_row(4), (std::vector<Natural>{1, 4, 6, 4, 1}));
}

TEST(PascalRow, MatchesAdditiveTriangle) {
  const auto tri = oracle::pascal_triangle(60);
  for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(pascal_row(n), tri[n]) << n;
}

TEST(PascalRow, RowSums) {
  for (unsigned n = 0; n <= 30; ++n) {
    Natural sum;
    Integer alternating;
    const auto row = pascal_row(n);
    for (std::size_t k = 0; k < row.size(); ++k) {
      sum += row[k];
      alternating += (k % 2 == 0) ? Integer(row[k]) : -Integer(row[k]);
    }
    EXPECT_EQ(sum, pow(Natural(2), n));
    if (n >= 1) EXPECT_TRUE(alternating.is_zero()) << n;
  }
}

TEST(Natural, RejectsNegative) {
  EXPECT_THROW(Natural(Integer(-1)), DomainError);
  EXPECT_THROW(Natural::from_string("-3"), DomainError);
}

TEST(Natural, DivideExactRejectsRemainder) {
  Natural a(7);
  EXPECT_THROW(a.divide_exact(Natural(2)), DomainError);
  EXPECT_THROW(a.divide_exact(Natural(0)), DomainError);
  EXPECT_EQ(Natural(12).divide_exact(Natural(4)), Natural(3));
}

TEST(Rational, ReducedCanonicalForm) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), Integer(-3));
  EXPECT_EQ(r.denominator(), Integer(2));
  EXPECT_EQ(r, Rational(Integer(-3), Integer(2)));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_EQ(Rational(4).to_fraction_string(), "4/1");
  EXPECT_EQ(Rational(Integer(0), Integer(-5)).to_fraction_string(), "0/1");
}

TEST(Rational, ZeroDenominatorAndDivision) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  EXPECT_THROW(Rational::from_string("1/0"), DomainError);
}

TEST(Rational, Parsing) {
  EXPECT_EQ(Rational::from_string("-7/3"), Rational(Integer(-7), Integer(3)));
  EXPECT_EQ(Rational::from_string("10/4"), Rational(Integer(5), Integer(2)));
  EXPECT_EQ(Rational::from_string("+5"), Rational(5));
  EXPECT_THROW(Rational::from_string("0.5"), DomainError);
  EXPECT_THROW(Rational::from_string("1/-2"), DomainError);
  EXPECT_THROW(Rational::from_string(""), DomainError);
  EXPECT_THROW(Rational::from_string("x"), DomainError);
}

TEST(Pow, ZeroToZeroIsOne) {
  EXPECT_EQ(pow(Natural(0), 0), Natural(1));
  EXPECT_EQ(pow(Integer(0), 0), Integer(1));
  EXPECT_EQ(pow(Rational(0), 0), Rational(1));
  EXPECT_EQ(pow(Rational(Integer(-2), Integer(3)), 3), Rational(Integer(-8), Integer(27)));
}

namespace {

Rational random_big_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
  // Multiply up so values exceed 64 bits.
  Integer n = Integer(num(rng)) * Integer(num(rng)) * Integer(num(rng));
  return Rational(n, Integer(den(rng)));
}

bool is_reduced(const Rational& r) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
  return r.denominator().sign() > 0 && (r.is_zero() ? r.denominator() == Integer(1) : g == 1);
}

}  // namespace

TEST(RationalProperties, FieldLawsAndCanonicalResults) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_big_rational(rng);
    const Rational b = random_big_rational(rng);
    const Rational c = random_big_rational(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
    for (const auto& r : {a + b, a - b, a * b, a * c - b}) EXPECT_TRUE(is_reduced(r)) << r;
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
      EXPECT_TRUE(is_reduced(a / b));
    }
  }
}
