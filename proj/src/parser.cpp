#include "tepperlab/parser.hpp"

#include <vector>

namespace tepperlab {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view src, const ParseOptions& options) : src_(src), options_(options) {}

  Polynomial parse() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    term(negate);
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      term(op == '-');
    }
    return Polynomial(std::move(coeffs_));
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_space() {
    while (!at_end() && is_space(src_[pos_])) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (peek() == '.') fail("decimal literals are not supported, write a fraction");
    return Integer::from_string(src_.substr(start, pos_ - start));
  }

  void term(bool negate) {
    skip_space();
    Rational coeff(1);
    std::size_t exponent = 0;
    if (is_digit(peek())) {
      Integer numerator = integer_literal();
      Integer denominator(1);
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!is_digit(peek())) fail("expected denominator");
        const std::size_t den_start = pos_;
        denominator = integer_literal();
        if (denominator.is_zero()) throw ParseError(den_start, "zero denominator");
        skip_space();
      }
      coeff = Rational(numerator, denominator);
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x') fail("expected 'x'");
      }
      if (peek() == 'x') exponent = variable();
    } else if (peek() == 'x') {
      exponent = variable();
    } else {
      fail("expected coefficient or 'x'");
    }
    if (negate) coeff = -coeff;
    if (coeffs_.size() <= exponent) coeffs_.resize(exponent + 1);
    coeffs_[exponent] += coeff;
  }

  std::size_t variable() {
    ++pos_;  // 'x'
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    skip_space();
    if (!is_digit(peek())) fail("expected exponent");
    std::size_t value = 0;
    while (is_digit(peek())) {
      value = value * 10 + static_cast<std::size_t>(peek() - '0');
      if (value > options_.max_degree) {
        fail("exponent exceeds the degree cap of " + std::to_string(options_.max_degree));
      }
      ++pos_;
    }
    return value;
  }

  std::string_view src_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view source, const ParseOptions& options) {
  return PolynomialParser(source, options).parse();
}

std::string render_polynomial(const Polynomial& p) {
  const auto c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    const bool negative = c[i].sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c[i] : c[i];
    if (i == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace tepperlab
