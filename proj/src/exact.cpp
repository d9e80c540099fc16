#include "tepperlab/exact.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace tepperlab {

namespace {

bool is_decimal_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_signed(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_decimal_digits(digits)) {
    throw DomainError("not an integer literal: '" + std::string(text) + "'");
  }
  mpz_class v(std::string(digits), 10);
  if (text.front() == '-') v = -v;
  return v;
}

}  // namespace

Integer Integer::from_string(std::string_view text) { return Integer(parse_signed(text)); }

std::int64_t Integer::to_int64() const {
  if (!v_.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + to_string());
  return v_.get_si();
}

Natural::Natural(const Integer& v) : v_(v.raw()) {
  if (sgn(v_) < 0) throw DomainError("negative value is not a natural: " + v_.get_str());
}

Natural::Natural(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw DomainError("negative value is not a natural: " + v_.get_str());
}

Natural Natural::from_string(std::string_view text) {
  if (!is_decimal_digits(text)) {
    throw DomainError("not a natural literal: '" + std::string(text) + "'");
  }
  return Natural(mpz_class(std::string(text), 10));
}

std::uint64_t Natural::to_uint64() const {
  if (!v_.fits_ulong_p()) throw DomainError("natural does not fit in 64 bits: " + to_string());
  return v_.get_ui();
}

Natural& Natural::divide_exact(const Natural& o) {
  if (o.is_zero() || !mpz_divisible_p(v_.get_mpz_t(), o.v_.get_mpz_t())) {
    throw DomainError("inexact division " + to_string() + " / " + o.to_string());
  }
  mpz_divexact(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) throw DomainError("zero denominator");
  v_ = mpq_class(numerator.raw(), denominator.raw());
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::from_string(text));
  const auto den_text = text.substr(slash + 1);
  if (!is_decimal_digits(den_text)) {
    throw DomainError("not a rational literal: '" + std::string(text) + "'");
  }
  return Rational(Integer::from_string(text.substr(0, slash)), Integer::from_string(den_text));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_fraction_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Natural& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

namespace {

unsigned long checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<unsigned long>::max()) throw DomainError("exponent too large");
  return static_cast<unsigned long>(e);
}

}  // namespace

Integer pow(const Integer& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), checked_exponent(exponent));
  return Integer(std::move(r));
}

Natural pow(const Natural& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), checked_exponent(exponent));
  return Natural(std::move(r));
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  const auto e = checked_exponent(exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den().get_mpz_t(), e);
  // Powers of a reduced fraction stay reduced.
  return Rational(mpq_class(num, den));
}

Natural factorial(std::uint64_t n) {
  Natural r(1);
  for (std::uint64_t i = 2; i <= n; ++i) r *= Natural(i);
  return r;
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Natural(0);
  k = std::min(k, n - k);
  Natural r(1);
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= Natural(n - i);
    r.divide_exact(Natural(i + 1));
  }
  return r;
}

std::vector<Natural> pascal_row(std::uint64_t n) {
  std::vector<Natural> row;
  row.reserve(n + 1);
  row.emplace_back(1);
  for (std::uint64_t k = 0; k < n; ++k) {
    Natural next = row.back() * Natural(n - k);
    next.divide_exact(Natural(k + 1));
    row.push_back(std::move(next));
  }
  return row;
}

}  // namespace tepperlab
