#pragma once

// Dense univariate polynomials over Rational.

#include "tepperlab/exact.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tepperlab {

/// Degree of a polynomial, with a distinguished value for the zero
/// polynomial that compares below every finite degree.
class Degree {
 public:
  static constexpr Degree minus_infinity() noexcept { return Degree(); }
  static constexpr Degree of(std::size_t d) noexcept { return Degree(d); }

  constexpr bool is_finite() const noexcept { return finite_; }
  /// The finite degree; throws DomainError for minus infinity.
  std::size_t value() const;

  friend constexpr bool operator==(Degree a, Degree b) noexcept {
    return a.finite_ == b.finite_ && a.d_ == b.d_;
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
    return a.d_ <=> b.d_;
  }

  std::string to_string() const;

 private:
  constexpr Degree() noexcept = default;
  constexpr explicit Degree(std::size_t d) noexcept : finite_(true), d_(d) {}

  bool finite_ = false;
  std::size_t d_ = 0;
};

/// Dense polynomial; coefficient i multiplies x^i. The coefficient vector is
/// kept canonical: empty for zero, otherwise the last entry is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// c * x^d.
  static Polynomial monomial(std::size_t d, const Rational& c = Rational(1));

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void canonicalize();

  std::vector<Rational> coeffs_;
};

Degree degree(const Polynomial& p);

/// Leading coefficient a_n; throws DomainError for the zero polynomial.
const Rational& leading_coefficient(const Polynomial& p);

/// P(x) by Horner's scheme.
Rational evaluate(const Polynomial& p, const Rational& x);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial subtract(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);

/// Taylor shift: returns Q with Q(x) = P(x - c), by repeated synthetic
/// division (O(n^2) coefficient operations).
Polynomial shift(const Polynomial& p, const Rational& c);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }
inline Polynomial operator*(const Rational& c, const Polynomial& p) { return scale(p, c); }

/// Debug form, e.g. "x^3 - 3*x^2 + 3*x - 1" (same text as render_polynomial).
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace tepperlab
