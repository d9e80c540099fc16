#pragma once

// Wilson's congruence (p-1)! = -1 (mod p), computed three ways:
//
//   naive_factorial     iterated modular product
//   tepper_sum          sum_{k=0}^{p-1} (-1)^k C(p-1,k) k^(p-1), reduced mod p
//   fermat_reduced_sum  the same sum with k^(p-1) replaced by 1 for k >= 1
//                       (Fermat's little theorem; primes only)

#include "tepperlab/exact.hpp"

#include <cstdint>
#include <string_view>

namespace tepperlab {

enum class WilsonRoute { naive_factorial, tepper_sum, fermat_reduced_sum };

std::string_view to_string(WilsonRoute route);

struct ModularCheck {
  std::uint64_t modulus = 0;
  std::uint64_t computed_residue = 0;
  std::uint64_t expected_residue = 0;
  WilsonRoute route = WilsonRoute::naive_factorial;

  bool passed() const noexcept { return computed_residue == expected_residue; }
};

inline constexpr std::uint64_t kDefaultWilsonLimit = 1'000'000;

/// base^exponent mod modulus by square-and-multiply, with 0^0 = 1.
/// Throws DomainError for modulus 0.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

/// Integer x reduced into [0, modulus).
std::uint64_t reduce(const Integer& x, std::uint64_t modulus);

/// n! mod modulus. Throws DomainError for modulus < 2.
std::uint64_t factorial_mod_naive(std::uint64_t n, std::uint64_t modulus);

/// Exact integer sum_{k=0}^{n} (-1)^k C(n,k) k^n, which equals (-1)^n n!.
Integer tepper_power_sum(std::uint64_t n);

/// Tepper route. Binomials are exact and reduced afterwards. Passes for every
/// prime; for composite p the residue is reported against p - 1 regardless.
/// Throws DomainError for p < 2.
ModularCheck factorial_mod_tepper(std::uint64_t p);

/// Fermat-reduced route. Throws DomainError unless p is prime.
ModularCheck factorial_mod_fermat_route(std::uint64_t p);

/// k^(p-1) = 1 (mod p). Throws DomainError unless p >= 2 and 1 <= k < p.
bool fermat_check(std::uint64_t k, std::uint64_t p);

/// Wilson primality test: (n-1)! = n - 1 (mod n). Throws DomainError for
/// n < 2 or n above `limit`.
bool wilson_primality(std::uint64_t n, std::uint64_t limit = kDefaultWilsonLimit);

/// Trial-division primality; the independent reference for wilson_primality.
bool is_prime_trial_division(std::uint64_t n);

/// C(p-1, k) = (-1)^k (mod p) for all 0 <= k <= p-1. Holds for every prime;
/// used to cross-check the exact binomials of the Tepper route.
bool binomial_sign_shortcut_holds(std::uint64_t p);

}  // namespace tepperlab
