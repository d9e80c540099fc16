#pragma once

// Verifiers for the alternating-binomial-sum identities. Each returns an
// IdentityReport carrying the claimed value, the computed value and, in
// symbolic mode, the full sum polynomial as a witness.
//
//   tepper              sum (-1)^k C(n,k) (x-k)^n           = n!
//   lemma_vanishing     sum (-1)^k C(n,k) P(x-k)            = 0        deg P < n
//   generalized_tepper  sum (-1)^k C(n,k) P(x-k)            = a_n n!   n = deg P
//   conjecture_step_l   sum (-1)^k C(n,k) P(x-lk)           = a_n l^n n!
//   power_sum_zero      sum_{k>=1} (-1)^(k-1) C(n,k) k^p    = 0        1 <= p < n
//   power_sum_factorial sum_{k>=1} (-1)^(k-1) C(p,k) k^p    = (-1)^(p-1) p!

#include "tepperlab/exact.hpp"
#include "tepperlab/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tepperlab {

enum class IdentityName {
  tepper,
  lemma_vanishing,
  generalized_tepper,
  conjecture_step_l,
  power_sum_zero,
  power_sum_factorial,
};

std::string_view to_string(IdentityName name);

enum class ReportStatus { passed, failed, input_error };

enum class Mode { numeric, symbolic };

/// How a verifier evaluates the sum: as a polynomial in x, or at one point.
struct Evaluation {
  Mode mode = Mode::symbolic;
  Rational x;

  static Evaluation symbolic() { return {Mode::symbolic, Rational(0)}; }
  static Evaluation numeric_at(Rational x) { return {Mode::numeric, std::move(x)}; }
};

/// Claimed or computed value: a number (numeric mode) or a polynomial
/// (symbolic mode). std::monostate when an input error prevented computation.
using ReportValue = std::variant<std::monostate, Rational, Polynomial>;

struct IdentityReport {
  IdentityName name = IdentityName::tepper;
  std::string parameters;
  ReportStatus status = ReportStatus::input_error;
  ReportValue claimed;
  ReportValue computed;
  std::optional<Polynomial> witness;
  std::string input_error;

  bool passed() const noexcept { return status == ReportStatus::passed; }
  bool is_input_error() const noexcept { return status == ReportStatus::input_error; }

  /// Sets status from exact equality of claimed and computed.
  static IdentityReport compared(IdentityName name, std::string parameters, ReportValue claimed,
                                 ReportValue computed, std::optional<Polynomial> witness = std::nullopt);
  static IdentityReport rejected(IdentityName name, std::string parameters, std::string why);
};

IdentityReport verify_tepper(std::uint64_t n, const Evaluation& how = Evaluation::symbolic());

/// Precondition deg P < n; violations give an input-error report.
IdentityReport verify_lemma(const Polynomial& p, std::uint64_t n, const Evaluation& how = Evaluation::symbolic());

/// Order n = deg P, step 1, claimed a_n n!. The zero polynomial is an input error.
IdentityReport verify_generalized(const Polynomial& p, const Evaluation& how = Evaluation::symbolic());

/// Order n = deg P, step l, claimed a_n l^n n!. l = 0 or P = 0 is an input error.
IdentityReport verify_conjecture(const Polynomial& p, std::uint64_t l, const Evaluation& how = Evaluation::symbolic());

/// Power-sum identities. nullopt when p > n (no closed form is claimed);
/// p = 0 is an input error.
std::optional<IdentityReport> verify_power_sum(std::uint64_t n, std::uint64_t p);

struct ExpansionReport {
  IdentityReport report;
  /// inner_sums[j] = sum_k (-1)^k C(n,k) (-k)^(n-j), the coefficient sum
  /// attached to x^j after expanding each (x-k)^n binomially.
  std::vector<Integer> inner_sums;
};

/// Tepper's identity recomputed by exchanging the order of summation.
/// Passes iff inner_sums = (n!, 0, ..., 0) and the total at x is n!.
ExpansionReport verify_via_expansion(std::uint64_t n, const Rational& x);

/// Random polynomial of exactly the given degree: numerators in [-99, 99],
/// denominators in [1, 9], nonzero leading coefficient.
Polynomial random_polynomial(std::size_t degree, std::mt19937_64& rng);

/// Random rational with numerator in [-bound, bound] and denominator in [1, 9].
Rational random_rational(std::mt19937_64& rng, std::int64_t bound = 99);

struct SweepOptions {
  std::uint64_t max_degree = 0;
  std::uint64_t max_step = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 20210506;
  unsigned threads = 1;
};

/// One symbolic conjecture report per (degree, step, trial), in that order.
/// Degrees run over [min(1, max_degree), max_degree] and steps over
/// [1, max_step]. Output depends only on the options, not on `threads`.
std::vector<IdentityReport> sweep_conjecture(const SweepOptions& options);

}  // namespace tepperlab
