#pragma once

// Text format for polynomials in x.
//
//   expr  := term (("+" | "-") term)*
//   term  := coeff ["*"] [var] | var
//   var   := "x" ["^" natural]
//   coeff := integer | integer "/" positive-integer
//
// Whitespace between tokens is ignored, the first term may carry a unary
// minus, and like terms are combined. Decimal literals are rejected.

#include "tepperlab/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tepperlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);

  /// Character offset into the source at which parsing could not proceed.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct ParseOptions {
  std::size_t max_degree = 10'000;
};

Polynomial parse_polynomial(std::string_view source, const ParseOptions& options = {});

/// Descending-degree rendering, e.g. "x^3 - 3*x^2 + 3*x - 1"; the zero
/// polynomial renders as "0". parse_polynomial inverts it.
std::string render_polynomial(const Polynomial& p);

}  // namespace tepperlab
