#include "tepperlab/identities.hpp"

#include "tepperlab/diffcalc.hpp"
#include "tepperlab/occupancy.hpp"
#include "tepperlab/parser.hpp"

#include <algorithm>
#include <thread>

namespace tepperlab {

std::string_view to_string(IdentityName name) {
  switch (name) {
    case IdentityName::tepper: return "tepper";
    case IdentityName::lemma_vanishing: return "lemma_vanishing";
    case IdentityName::generalized_tepper: return "generalized_tepper";
    case IdentityName::conjecture_step_l: return "conjecture_step_l";
    case IdentityName::power_sum_zero: return "power_sum_zero";
    case IdentityName::power_sum_factorial: return "power_sum_factorial";
  }
  return "unknown";
}

IdentityReport IdentityReport::compared(IdentityName name, std::string parameters, ReportValue claimed,
                                        ReportValue computed, std::optional<Polynomial> witness) {
  IdentityReport r;
  r.name = name;
  r.parameters = std::move(parameters);
  r.status = (claimed == computed) ? ReportStatus::passed : ReportStatus::failed;
  r.claimed = std::move(claimed);
  r.computed = std::move(computed);
  r.witness = std::move(witness);
  return r;
}

IdentityReport IdentityReport::rejected(IdentityName name, std::string parameters, std::string why) {
  IdentityReport r;
  r.name = name;
  r.parameters = std::move(parameters);
  r.status = ReportStatus::input_error;
  r.input_error = std::move(why);
  return r;
}

namespace {

std::string mode_parameter(const Evaluation& how) {
  return how.mode == Mode::symbolic ? "mode=symbolic" : "x=" + how.x.to_string();
}

std::string poly_parameter(const Polynomial& p) { return "P=\"" + render_polynomial(p) + "\""; }

// Shared core: evaluates the alternating sum of order n, step l either as a
// polynomial or at a point, and compares it with `claimed`.
IdentityReport check_sum(IdentityName name, std::string parameters, const Polynomial& p, std::uint64_t order,
                         std::uint64_t step, const Rational& claimed, const Evaluation& how) {
  const DifferenceParams params(order, step);
  if (how.mode == Mode::symbolic) {
    Polynomial sum = alternating_sum_symbolic(p, params);
    return IdentityReport::compared(name, std::move(parameters), Polynomial::constant(claimed), sum, sum);
  }
  return IdentityReport::compared(name, std::move(parameters), claimed, alternating_sum_numeric(p, params, how.x));
}

}  // namespace

IdentityReport verify_tepper(std::uint64_t n, const Evaluation& how) {
  return check_sum(IdentityName::tepper, "n=" + std::to_string(n) + " " + mode_parameter(how),
                   Polynomial::monomial(n), n, 1, Rational(factorial(n)), how);
}

IdentityReport verify_lemma(const Polynomial& p, std::uint64_t n, const Evaluation& how) {
  std::string parameters = poly_parameter(p) + " n=" + std::to_string(n) + " " + mode_parameter(how);
  if (!(degree(p) < Degree::of(n))) {
    return IdentityReport::rejected(IdentityName::lemma_vanishing, std::move(parameters),
                                    "degree not less than n");
  }
  return check_sum(IdentityName::lemma_vanishing, std::move(parameters), p, n, 1, Rational(0), how);
}

IdentityReport verify_generalized(const Polynomial& p, const Evaluation& how) {
  std::string parameters = poly_parameter(p) + " " + mode_parameter(how);
  if (p.is_zero()) {
    return IdentityReport::rejected(IdentityName::generalized_tepper, std::move(parameters),
                                    "zero polynomial has no degree");
  }
  const std::size_t n = degree(p).value();
  return check_sum(IdentityName::generalized_tepper, std::move(parameters), p, n, 1,
                   leading_coefficient(p) * Rational(factorial(n)), how);
}

IdentityReport verify_conjecture(const Polynomial& p, std::uint64_t l, const Evaluation& how) {
  std::string parameters = poly_parameter(p) + " l=" + std::to_string(l) + " " + mode_parameter(how);
  if (l == 0) {
    return IdentityReport::rejected(IdentityName::conjecture_step_l, std::move(parameters),
                                    "step l must be a positive integer");
  }
  if (p.is_zero()) {
    return IdentityReport::rejected(IdentityName::conjecture_step_l, std::move(parameters),
                                    "zero polynomial has no degree");
  }
  const std::size_t n = degree(p).value();
  const Rational claimed = leading_coefficient(p) * Rational(pow(Natural(l), n)) * Rational(factorial(n));
  return check_sum(IdentityName::conjecture_step_l, std::move(parameters), p, n, l, claimed, how);
}

std::optional<IdentityReport> verify_power_sum(std::uint64_t n, std::uint64_t p) {
  std::string parameters = "n=" + std::to_string(n) + " p=" + std::to_string(p);
  if (p == 0) {
    return IdentityReport::rejected(IdentityName::power_sum_zero, std::move(parameters), "p must be at least 1");
  }
  if (p > n) return std::nullopt;
  const Rational computed(alternating_power_sum(n, p));
  if (p < n) {
    return IdentityReport::compared(IdentityName::power_sum_zero, std::move(parameters), Rational(0), computed);
  }
  Rational claimed(factorial(p));
  if (p % 2 == 0) claimed = -claimed;  // (-1)^(p-1)
  return IdentityReport::compared(IdentityName::power_sum_factorial, std::move(parameters), claimed, computed);
}

ExpansionReport verify_via_expansion(std::uint64_t n, const Rational& x) {
  const auto row = pascal_row(n);
  std::vector<Integer> inner(n + 1);
  for (std::uint64_t j = 0; j <= n; ++j) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      Integer term = Integer(row[k]) * pow(Integer(-static_cast<std::int64_t>(k)), n - j);
      if (alternating_sign(k) < 0) {
        inner[j] -= term;
      } else {
        inner[j] += term;
      }
    }
  }

  // Reassemble sum_j C(n,j) x^j inner_j, the exchanged-order form of the sum.
  std::vector<Rational> coeffs(n + 1);
  for (std::uint64_t j = 0; j <= n; ++j) coeffs[j] = Rational(row[j]) * Rational(inner[j]);
  Polynomial witness(std::move(coeffs));
  const Rational total = evaluate(witness, x);

  const Natural n_factorial = factorial(n);
  bool inner_ok = inner[0] == Integer(n_factorial);
  for (std::uint64_t j = 1; j <= n; ++j) inner_ok = inner_ok && inner[j].is_zero();

  std::string parameters = "n=" + std::to_string(n) + " x=" + x.to_string() + " route=expansion";
  IdentityReport report = IdentityReport::compared(IdentityName::tepper, std::move(parameters),
                                                   Rational(n_factorial), total, std::move(witness));
  if (!inner_ok) report.status = ReportStatus::failed;
  return {std::move(report), std::move(inner)};
}

Rational random_rational(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, 9);
  const std::int64_t a = num(rng);
  const std::int64_t b = den(rng);
  return Rational(Integer(a), Integer(b));
}

Polynomial random_polynomial(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Rational> coeffs(degree + 1);
  for (auto& c : coeffs) c = random_rational(rng);
  while (coeffs.back().is_zero()) coeffs.back() = random_rational(rng);
  return Polynomial(std::move(coeffs));
}

std::vector<IdentityReport> sweep_conjecture(const SweepOptions& options) {
  struct Instance {
    Polynomial p;
    std::uint64_t step;
  };
  std::vector<Instance> instances;
  std::mt19937_64 rng(options.seed);
  const std::uint64_t first_degree = std::min<std::uint64_t>(1, options.max_degree);
  for (std::uint64_t d = first_degree; d <= options.max_degree; ++d) {
    for (std::uint64_t l = 1; l <= options.max_step; ++l) {
      for (std::uint64_t t = 0; t < options.trials; ++t) {
        instances.push_back({random_polynomial(d, rng), l});
      }
    }
  }

  std::vector<IdentityReport> reports(instances.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(instances.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < instances.size(); i += workers) {
      reports[i] = verify_conjecture(instances[i].p, instances[i].step);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  return reports;
}

}  // namespace tepperlab
