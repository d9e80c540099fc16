#pragma once

// Backward finite differences with step l and the alternating binomial sum
//
//   S(x) = sum_{k=0}^{n} (-1)^k C(n,k) P(x - l k).
//
// S is computed two independent ways: by summing Taylor-shifted copies of P
// and by applying the first difference P(x) - P(x - l) n times. The two
// must agree coefficient for coefficient.

#include "tepperlab/exact.hpp"
#include "tepperlab/polynomial.hpp"

#include <cstddef>
#include <cstdint>

namespace tepperlab {

class DifferenceParams {
 public:
  /// Throws DomainError when step is zero.
  DifferenceParams(std::uint64_t order, std::uint64_t step);

  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t step() const noexcept { return step_; }

 private:
  std::uint64_t order_;
  std::uint64_t step_;
};

/// D(x) = P(x) - P(x - step). Throws DomainError when step is zero.
Polynomial backward_difference(const Polynomial& p, std::uint64_t step);

/// The alternating sum, by direct summation of shifted polynomials.
Polynomial alternating_sum_symbolic(const Polynomial& p, const DifferenceParams& params);

/// The alternating sum at a single point, by evaluating P at each x - l k.
Rational alternating_sum_numeric(const Polynomial& p, const DifferenceParams& params, const Rational& x);

/// backward_difference applied params.order() times.
Polynomial iterated_difference(const Polynomial& p, const DifferenceParams& params);

}  // namespace tepperlab
