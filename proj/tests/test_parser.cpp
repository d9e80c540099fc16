#include "tepperlab/parser.hpp"

#include "tepperlab/identities.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tepperlab;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(Integer(n), Integer(d)); }

std::size_t error_offset(std::string_view src) {
  try {
    parse_polynomial(src);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string_view::npos;
}

}  // namespace

TEST(Parse, DocumentedValues) {
  EXPECT_EQ(parse_polynomial("x^3"), Polynomial::monomial(3));
  EXPECT_EQ(parse_polynomial("1/2*x^2 - x + 3"), (Polynomial{q(3), q(-1), q(1, 2)}));
  EXPECT_EQ(parse_polynomial("x + x"), (Polynomial{q(0), q(2)}));
}

TEST(Parse, AcceptedForms) {
  EXPECT_EQ(parse_polynomial("-x"), (Polynomial{q(0), q(-1)}));
  EXPECT_EQ(parse_polynomial("2x"), (Polynomial{q(0), q(2)}));
  EXPECT_EQ(parse_polynomial("  5 x ^ 2  -  1 / 3 "), (Polynomial{q(-1, 3), q(0), q(5)}));
  EXPECT_EQ(parse_polynomial("3"), Polynomial::constant(q(3)));
  EXPECT_EQ(parse_polynomial("x^0 + 0"), Polynomial::constant(q(1)));
  EXPECT_TRUE(parse_polynomial("x - x").is_zero());
  EXPECT_TRUE(parse_polynomial("0").is_zero());
  EXPECT_EQ(parse_polynomial("4/6*x"), (Polynomial{q(0), q(2, 3)}));
  EXPECT_EQ(parse_polynomial("123456789012345678901234567890"),
            Polynomial::constant(Rational::from_string("123456789012345678901234567890")));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_offset(""), 0U);
  EXPECT_EQ(error_offset("x^"), 2U);
  EXPECT_EQ(error_offset("x +"), 3U);
  EXPECT_EQ(error_offset("1/0*x"), 2U);
  EXPECT_EQ(error_offset("0.5*x"), 1U);
  EXPECT_EQ(error_offset("(x-1)^3"), 0U);
  EXPECT_EQ(error_offset("x y"), 2U);
  EXPECT_EQ(error_offset("2*3"), 2U);
  EXPECT_EQ(error_offset("x - -x"), 4U);
  EXPECT_EQ(error_offset("x^10001"), 6U);
  EXPECT_EQ(error_offset("x^10000"), std::string_view::npos);
  EXPECT_EQ(error_offset("1/x"), 2U);
}

TEST(Parse, DegreeCapIsConfigurable) {
  ParseOptions opts;
  opts.max_degree = 5;
  EXPECT_NO_THROW(parse_polynomial("x^5", opts));
  EXPECT_THROW(parse_polynomial("x^6", opts), ParseError);
}

TEST(Render, DocumentedValues) {
  EXPECT_EQ(render_polynomial(Polynomial{}), "0");
  EXPECT_EQ(render_polynomial(Polynomial{q(-1), q(3), q(-3), q(1)}), "x^3 - 3*x^2 + 3*x - 1");
  EXPECT_EQ(render_polynomial(Polynomial{q(0), q(2)}), "2*x");
  EXPECT_EQ(render_polynomial(Polynomial{q(1, 2), q(0), q(-1, 3)}), "-1/3*x^2 + 1/2");
  EXPECT_EQ(render_polynomial(Polynomial{q(0), q(-1)}), "-x");
}

TEST(ParserProperties, RoundTripAndDeterminism) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = random_polynomial(static_cast<std::size_t>(i % 16), rng);
    const std::string text = render_polynomial(p);
    EXPECT_EQ(parse_polynomial(text), p) << text;
    EXPECT_EQ(parse_polynomial(text), parse_polynomial(std::string(text)));
  }
}

// A reported offset o must be actionable: deleting or substituting the
// character at o (or inserting one there, at end of input) yields a source
// that parses or fails strictly later.
TEST(ParserProperties, ErrorOffsetsAreActionable) {
  const std::string alphabet = "0123456789x+-*/^ .";
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::size_t rejected = 0;

  auto advances = [](const std::string& s, std::size_t o) {
    const std::size_t e = error_offset(s);
    return e == std::string_view::npos || e > o;
  };

  for (int i = 0; i < 2000; ++i) {
    std::string src = render_polynomial(random_polynomial(static_cast<std::size_t>(i % 6), rng));
    std::uniform_int_distribution<std::size_t> pos(0, src.size());
    const std::size_t at = pos(rng);
    switch (i % 3) {
      case 0: if (at < src.size()) src.erase(at, 1); break;
      case 1: if (at < src.size()) src[at] = alphabet[pick(rng)]; break;
      default: src.insert(src.begin() + static_cast<std::ptrdiff_t>(at), alphabet[pick(rng)]); break;
    }
    const std::size_t o = error_offset(src);
    if (o == std::string_view::npos) continue;
    ++rejected;
    ASSERT_LE(o, src.size()) << src;

    bool repaired = false;
    if (o < src.size()) {
      std::string deleted = src;
      deleted.erase(o, 1);
      repaired = advances(deleted, o);
    }
    for (char c : alphabet) {
      if (repaired) break;
      std::string edited = src;
      if (o < src.size()) {
        edited[o] = c;
      } else {
        edited.push_back(c);
      }
      repaired = advances(edited, o);
    }
    EXPECT_TRUE(repaired) << "'" << src << "' offset " << o;
  }
  EXPECT_GT(rejected, 100U);
}
