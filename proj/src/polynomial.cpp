#include "tepperlab/polynomial.hpp"

#include "tepperlab/parser.hpp"

#include <algorithm>
#include <ostream>

namespace tepperlab {

std::size_t Degree::value() const {
  if (!finite_) throw DomainError("the zero polynomial has no finite degree");
  return d_;
}

std::string Degree::to_string() const { return finite_ ? std::to_string(d_) : "-inf"; }

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  canonicalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  canonicalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t d, const Rational& c) {
  std::vector<Rational> coeffs(d + 1);
  coeffs[d] = c;
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void Polynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree degree(const Polynomial& p) {
  const auto c = p.coefficients();
  return c.empty() ? Degree::minus_infinity() : Degree::of(c.size() - 1);
}

const Rational& leading_coefficient(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no leading coefficient");
  return p.coefficients().back();
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return Polynomial(std::move(out));
}

Polynomial subtract(const Polynomial& p, const Polynomial& q) { return add(p, scale(q, Rational(-1))); }

Polynomial scale(const Polynomial& p, const Rational& c) {
  if (c.is_zero()) return {};
  std::vector<Rational> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

Polynomial shift(const Polynomial& p, const Rational& c) {
  std::vector<Rational> a(p.coefficients().begin(), p.coefficients().end());
  if (a.size() < 2 || c.is_zero()) return p;
  // P(x - c): synthetic division by (x + c), i.e. Horner steps with -c.
  const Rational minus_c = -c;
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1;; --j) {
      a[j] += minus_c * a[j + 1];
      if (j == i) break;
    }
  }
  return Polynomial(std::move(a));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << render_polynomial(p); }

}  // namespace tepperlab
