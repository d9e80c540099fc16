#pragma once

// Occupancy counting: in how many ways can p passengers board n wagons so
// that exactly r wagons end up occupied? Equivalently, how many functions
// from a p-set to an n-set have an image of size exactly r.
//
// The closed form is C(n,r) times the inclusion-exclusion surjection count
//
//   surj(r, p) = sum_{i=0}^{r} (-1)^i C(r,i) (r-i)^p,
//
// and brute_force_occupancy enumerates all n^p assignments as an oracle.
// (The same question phrased as p particles hitting n equally likely
// receivers of a sensor has the identical count.)

#include "tepperlab/exact.hpp"

#include <cstdint>
#include <optional>

namespace tepperlab {

class OccupancyParams {
 public:
  /// Throws DomainError when occupied > wagons.
  OccupancyParams(std::uint64_t wagons, std::uint64_t passengers, std::uint64_t occupied);

  std::uint64_t wagons() const noexcept { return wagons_; }
  std::uint64_t passengers() const noexcept { return passengers_; }
  std::uint64_t occupied() const noexcept { return occupied_; }

 private:
  std::uint64_t wagons_;
  std::uint64_t passengers_;
  std::uint64_t occupied_;
};

struct OccupancyResult {
  Natural closed_form;
  std::optional<Natural> oracle;  // absent when enumeration was skipped

  /// Unset when the oracle is absent.
  std::optional<bool> agrees() const {
    if (!oracle) return std::nullopt;
    return *oracle == closed_form;
  }
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

Natural surjection_count(std::uint64_t r, std::uint64_t p);

Natural exact_occupancy_count(const OccupancyParams& params);

/// Exhaustive count over all wagons^passengers assignments. Returns nullopt
/// when that number exceeds `budget`.
std::optional<Natural> brute_force_occupancy(const OccupancyParams& params,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

/// Closed form, plus the oracle when requested and within budget.
OccupancyResult occupancy(const OccupancyParams& params, bool with_oracle,
                          std::uint64_t budget = kDefaultEnumerationBudget);

/// C(n,1) 1^p - C(n,2) 2^p + ... + (-1)^(n-1) C(n,n) n^p.
/// Zero for 1 <= p < n and (-1)^(p-1) p! for p = n. Throws DomainError for p = 0.
Integer alternating_power_sum(std::uint64_t n, std::uint64_t p);

/// Stirling numbers of the second kind via S(p,r) = r S(p-1,r) + S(p-1,r-1).
Natural stirling2(std::uint64_t p, std::uint64_t r);

}  // namespace tepperlab
