#include "tepperlab/diffcalc.hpp"

namespace tepperlab {

DifferenceParams::DifferenceParams(std::uint64_t order, std::uint64_t step) : order_(order), step_(step) {
  if (step == 0) throw DomainError("difference step must be a positive integer");
}

Polynomial backward_difference(const Polynomial& p, std::uint64_t step) {
  if (step == 0) throw DomainError("difference step must be a positive integer");
  return p - shift(p, Rational(Natural(step)));
}

Polynomial alternating_sum_symbolic(const Polynomial& p, const DifferenceParams& params) {
  const auto row = pascal_row(params.order());
  Polynomial sum;
  for (std::uint64_t k = 0; k <= params.order(); ++k) {
    const Rational offset(Natural(params.step()) * Natural(k));
    Rational weight(row[k]);
    if (alternating_sign(k) < 0) weight = -weight;
    sum = sum + scale(shift(p, offset), weight);
  }
  return sum;
}

Rational alternating_sum_numeric(const Polynomial& p, const DifferenceParams& params, const Rational& x) {
  const auto row = pascal_row(params.order());
  Rational sum;
  for (std::uint64_t k = 0; k <= params.order(); ++k) {
    const Rational point = x - Rational(Natural(params.step()) * Natural(k));
    const Rational term = Rational(row[k]) * evaluate(p, point);
    if (alternating_sign(k) < 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

Polynomial iterated_difference(const Polynomial& p, const DifferenceParams& params) {
  Polynomial d = p;
  for (std::uint64_t i = 0; i < params.order() && !d.is_zero(); ++i) {
    d = backward_difference(d, params.step());
  }
  return d;
}

}  // namespace tepperlab
