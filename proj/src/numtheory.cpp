#include "tepperlab/numtheory.hpp"

namespace tepperlab {

std::string_view to_string(WilsonRoute route) {
  switch (route) {
    case WilsonRoute::naive_factorial: return "naive";
    case WilsonRoute::tepper_sum: return "tepper";
    case WilsonRoute::fermat_reduced_sum: return "fermat";
  }
  return "unknown";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t residue(const Natural& x, std::uint64_t modulus) {
  return mpz_fdiv_ui(x.raw().get_mpz_t(), modulus);
}

void require_modulus(std::uint64_t p, std::uint64_t minimum, const char* what) {
  if (p < minimum) throw DomainError(std::string(what) + " must be at least " + std::to_string(minimum));
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  require_modulus(modulus, 1, "modulus");
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const Integer& x, std::uint64_t modulus) {
  require_modulus(modulus, 1, "modulus");
  return mpz_fdiv_ui(x.raw().get_mpz_t(), modulus);
}

std::uint64_t factorial_mod_naive(std::uint64_t n, std::uint64_t modulus) {
  require_modulus(modulus, 2, "modulus");
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n && r != 0; ++i) r = mul_mod(r, i % modulus, modulus);
  return r;
}

Integer tepper_power_sum(std::uint64_t n) {
  const auto row = pascal_row(n);
  Integer sum;
  for (std::uint64_t k = 0; k <= n; ++k) {
    Integer term = Integer(row[k]) * Integer(pow(Natural(k), n));
    if (alternating_sign(k) < 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

ModularCheck factorial_mod_tepper(std::uint64_t p) {
  require_modulus(p, 2, "p");
  const std::uint64_t n = p - 1;
  // C(n,k) exactly, advanced by the multiplicative recurrence.
  Natural c(1);
  std::uint64_t sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const std::uint64_t term = mul_mod(residue(c, p), mod_pow(k, n, p), p);
    sum = (alternating_sign(k) < 0) ? (sum + p - term) % p : (sum + term) % p;
    if (k < n) {
      c *= Natural(n - k);
      c.divide_exact(Natural(k + 1));
    }
  }
  return {p, sum, p - 1, WilsonRoute::tepper_sum};
}

ModularCheck factorial_mod_fermat_route(std::uint64_t p) {
  require_modulus(p, 2, "p");
  if (!is_prime_trial_division(p)) {
    throw DomainError("the Fermat route needs a prime modulus, got " + std::to_string(p));
  }
  const std::uint64_t n = p - 1;
  Natural c(1);
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    c *= Natural(n - k + 1);
    c.divide_exact(Natural(k));
    const std::uint64_t term = residue(c, p);
    sum = (alternating_sign(k) < 0) ? (sum + p - term) % p : (sum + term) % p;
  }
  return {p, sum, p - 1, WilsonRoute::fermat_reduced_sum};
}

bool fermat_check(std::uint64_t k, std::uint64_t p) {
  require_modulus(p, 2, "p");
  if (k < 1 || k >= p) throw DomainError("fermat_check needs 1 <= k < p");
  return mod_pow(k, p - 1, p) == 1;
}

bool wilson_primality(std::uint64_t n, std::uint64_t limit) {
  require_modulus(n, 2, "n");
  if (n > limit) {
    throw DomainError("wilson_primality input " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  }
  return factorial_mod_naive(n - 1, n) == n - 1;
}

bool is_prime_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool binomial_sign_shortcut_holds(std::uint64_t p) {
  require_modulus(p, 2, "p");
  const std::uint64_t n = p - 1;
  Natural c(1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    const std::uint64_t expected = (alternating_sign(k) < 0) ? p - 1 : 1 % p;
    if (residue(c, p) != expected) return false;
    if (k < n) {
      c *= Natural(n - k);
      c.divide_exact(Natural(k + 1));
    }
  }
  return true;
}

}  // namespace tepperlab
