#include "tepperlab/occupancy.hpp"

#include <algorithm>
#include <vector>

namespace tepperlab {

OccupancyParams::OccupancyParams(std::uint64_t wagons, std::uint64_t passengers, std::uint64_t occupied)
    : wagons_(wagons), passengers_(passengers), occupied_(occupied) {
  if (occupied > wagons) {
    throw DomainError("occupied wagons (" + std::to_string(occupied) + ") exceed wagons (" +
                      std::to_string(wagons) + ")");
  }
}

Natural surjection_count(std::uint64_t r, std::uint64_t p) {
  const auto row = pascal_row(r);
  Integer sum;
  for (std::uint64_t i = 0; i <= r; ++i) {
    Integer term = Integer(row[i]) * Integer(pow(Natural(r - i), p));
    if (alternating_sign(i) < 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return Natural(sum);
}

namespace {

// n^p <= budget (and p <= budget, which bounds the counter itself).
bool assignments_within(std::uint64_t n, std::uint64_t p, std::uint64_t budget) {
  if (p > budget) return false;
  if (n <= 1) return true;
  unsigned __int128 total = 1;
  for (std::uint64_t i = 0; i < p; ++i) {
    total *= n;
    if (total > budget) return false;
  }
  return true;
}

}  // namespace

Natural exact_occupancy_count(const OccupancyParams& params) {
  return binomial(params.wagons(), params.occupied()) * surjection_count(params.occupied(), params.passengers());
}

std::optional<Natural> brute_force_occupancy(const OccupancyParams& params, std::uint64_t budget) {
  const std::uint64_t n = params.wagons();
  const std::uint64_t p = params.passengers();
  if (!assignments_within(n, p, budget)) return std::nullopt;
  if (p == 0) return Natural(params.occupied() == 0 ? 1 : 0);
  if (n == 0) return Natural(0);

  // Base-n counter over assignments; hits[w] is the number of passengers in
  // wagon w, and distinct tracks how many wagons are nonempty.
  std::vector<std::uint64_t> digits(p, 0);
  std::vector<std::uint64_t> hits(n, 0);
  hits[0] = p;
  std::uint64_t distinct = 1;
  std::uint64_t count = 0;

  auto move = [&](std::uint64_t from, std::uint64_t to) {
    if (--hits[from] == 0) --distinct;
    if (hits[to]++ == 0) ++distinct;
  };

  for (;;) {
    if (distinct == params.occupied()) ++count;
    std::size_t i = 0;
    while (i < p && digits[i] + 1 == n) {
      move(digits[i], 0);
      digits[i] = 0;
      ++i;
    }
    if (i == p) break;
    move(digits[i], digits[i] + 1);
    ++digits[i];
  }
  return Natural(count);
}

OccupancyResult occupancy(const OccupancyParams& params, bool with_oracle, std::uint64_t budget) {
  OccupancyResult result{exact_occupancy_count(params), std::nullopt};
  if (with_oracle) result.oracle = brute_force_occupancy(params, budget);
  return result;
}

Integer alternating_power_sum(std::uint64_t n, std::uint64_t p) {
  if (p == 0) throw DomainError("alternating power sum needs p >= 1");
  const auto row = pascal_row(n);
  Integer sum;
  for (std::uint64_t k = 1; k <= n; ++k) {
    Integer term = Integer(row[k]) * Integer(pow(Natural(k), p));
    // Sign (-1)^(k-1).
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Natural stirling2(std::uint64_t p, std::uint64_t r) {
  if (r > p) return Natural(0);
  // Row-by-row over p, keeping columns 0..r.
  std::vector<Natural> row(r + 1, Natural(0));
  row[0] = Natural(1);
  for (std::uint64_t i = 1; i <= p; ++i) {
    for (std::uint64_t j = std::min(i, r); j >= 1; --j) {
      row[j] = Natural(j) * row[j] + row[j - 1];
    }
    row[0] = Natural(0);
  }
  return row[r];
}

}  // namespace tepperlab
