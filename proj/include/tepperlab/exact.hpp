#pragma once

// Exact arithmetic: arbitrary-precision naturals, integers and rationals,
// plus the combinatorial primitives (factorial, binomial, Pascal rows).
//
// The three number types are thin value wrappers over GMP. They keep their
// own invariants (Natural is never negative, Rational is always reduced with
// a positive denominator) so the rest of the library can rely on structural
// equality.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tepperlab {

/// Raised when an operation is applied outside its mathematical domain
/// (negative natural, zero denominator, leading coefficient of zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Natural;
class Rational;

/// Arbitrary-precision signed integer.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of a number type
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal literal; throws DomainError otherwise.
  static Integer from_string(std::string_view text);

  const mpz_class& raw() const noexcept { return v_; }
  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  std::string to_string() const { return v_.get_str(); }
  /// Value as int64; throws DomainError when it does not fit.
  std::int64_t to_int64() const;

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

/// Arbitrary-precision non-negative integer.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT
  /// Throws DomainError if `v` is negative.
  explicit Natural(const Integer& v);
  explicit Natural(mpz_class v);

  static Natural from_string(std::string_view text);

  const mpz_class& raw() const noexcept { return v_; }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  std::string to_string() const { return v_.get_str(); }
  std::uint64_t to_uint64() const;

  operator Integer() const { return Integer(v_); }  // NOLINT: every natural is an integer

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  /// Exact division; throws DomainError if `o` does not divide *this.
  Natural& divide_exact(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(const Integer& v) : v_(v.raw()) {}              // NOLINT
  Rational(const Natural& v) : v_(v.raw()) {}              // NOLINT
  /// numerator / denominator; throws DomainError on a zero denominator.
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(mpq_class v);

  /// Accepts "a" or "a/b" with optional sign on a; no decimals.
  static Rational from_string(std::string_view text);

  const mpq_class& raw() const noexcept { return v_; }
  Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(v_.get_den())); }
  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Always "n/d", also for integers (used by the JSON serializer).
  std::string to_fraction_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);
std::ostream& operator<<(std::ostream& os, const Natural& v);
std::ostream& operator<<(std::ostream& os, const Rational& v);

/// base^exponent with 0^0 = 1.
Integer pow(const Integer& base, std::uint64_t exponent);
Natural pow(const Natural& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::uint64_t exponent);

/// n! (0! = 1).
Natural factorial(std::uint64_t n);

/// C(n, k); zero when k > n.
Natural binomial(std::uint64_t n, std::uint64_t k);

/// (C(n,0), ..., C(n,n)) via C(n,k+1) = C(n,k) (n-k) / (k+1).
std::vector<Natural> pascal_row(std::uint64_t n);

/// (-1)^k as a small integer.
constexpr int alternating_sign(std::uint64_t k) noexcept { return (k % 2 == 0) ? 1 : -1; }

}  // namespace tepperlab
