#include "tepperlab/occupancy.hpp"

#include "support/oracles.hpp"
#include "tepperlab/diffcalc.hpp"

#include <gtest/gtest.h>

using namespace tepperlab;

TEST(OccupancyParams, RejectsMoreOccupiedThanWagons) {
  EXPECT_THROW(OccupancyParams(2, 5, 3), DomainError);
  EXPECT_NO_THROW(OccupancyParams(3, 0, 3));
}

TEST(ExactOccupancyCount, DocumentedValues) {
  ASSERT_EQ(oracle::count_functions_with_image(3, 2, 2), 6U);
  EXPECT_EQ(exact_occupancy_count({3, 2, 2}), Natural(6));
  EXPECT_EQ(exact_occupancy_count({5, 3, 5}), Natural(0));
  EXPECT_EQ(exact_occupancy_count({4, 4, 4}), Natural(24));
  EXPECT_EQ(exact_occupancy_count({0, 0, 0}), Natural(1));
  EXPECT_EQ(exact_occupancy_count({3, 0, 0}), Natural(1));
  EXPECT_EQ(exact_occupancy_count({3, 2, 0}), Natural(0));
}

TEST(BruteForceOccupancy, DocumentedValues) {
  EXPECT_EQ(brute_force_occupancy({3, 2, 2}), Natural(6));
  ASSERT_EQ(oracle::count_functions_with_image(2, 3, 1), 2U);
  EXPECT_EQ(brute_force_occupancy({2, 3, 1}), Natural(2));
  EXPECT_EQ(brute_force_occupancy({1, 1, 1}), Natural(1));
}

TEST(BruteForceOccupancy, BudgetGuard) {
  EXPECT_FALSE(brute_force_occupancy({10, 8, 3}, 1000).has_value());
  EXPECT_TRUE(brute_force_occupancy({10, 3, 3}, 1000).has_value());
  EXPECT_FALSE(brute_force_occupancy({1, 5000, 1}, 1000).has_value());
  const auto r = occupancy({10, 8, 3}, true, 1000);
  EXPECT_FALSE(r.oracle.has_value());
  EXPECT_FALSE(r.agrees().has_value());
  EXPECT_GT(r.closed_form, Natural(0));
}

TEST(BruteForceOccupancy, MatchesRecursiveEnumeration) {
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned p = 0; p <= 5; ++p) {
      for (unsigned r = 0; r <= n; ++r) {
        EXPECT_EQ(brute_force_occupancy({n, p, r}), Natural(oracle::count_functions_with_image(n, p, r)))
            << n << " " << p << " " << r;
      }
    }
  }
}

TEST(SurjectionCount, DocumentedValues) {
  ASSERT_EQ(oracle::count_surjections(2, 2), 2U);
  EXPECT_EQ(surjection_count(2, 2), Natural(2));
  EXPECT_EQ(surjection_count(3, 3), Natural(6));
  EXPECT_EQ(surjection_count(3, 2), Natural(0));
  EXPECT_EQ(surjection_count(0, 0), Natural(1));
  EXPECT_EQ(surjection_count(0, 3), Natural(0));
  for (unsigned r = 0; r <= 6; ++r) {
    for (unsigned p = 0; p <= 6; ++p) EXPECT_EQ(surjection_count(r, p), Natural(oracle::count_surjections(r, p)));
  }
}

TEST(AlternatingPowerSum, DocumentedValues) {
  EXPECT_EQ(alternating_power_sum(3, 2), Integer(0));
  EXPECT_EQ(alternating_power_sum(2, 2), Integer(-2));
  EXPECT_EQ(alternating_power_sum(4, 1), Integer(0));
  EXPECT_THROW(alternating_power_sum(4, 0), DomainError);
  // Outside the classified range the raw value is still returned:
  // 2*1 - 1*8 = -6.
  EXPECT_EQ(alternating_power_sum(2, 3), Integer(-6));
}

TEST(Stirling2, DocumentedValues) {
  ASSERT_EQ(oracle::count_set_partitions(3, 2), 3U);
  EXPECT_EQ(stirling2(3, 2), Natural(3));
  EXPECT_EQ(stirling2(5, 5), Natural(1));
  EXPECT_EQ(stirling2(0, 0), Natural(1));
  ASSERT_EQ(oracle::count_set_partitions(4, 2), 7U);
  EXPECT_EQ(stirling2(4, 2), Natural(7));
  EXPECT_EQ(stirling2(2, 3), Natural(0));
  EXPECT_EQ(stirling2(4, 0), Natural(0));
  for (unsigned p = 0; p <= 9; ++p) {
    for (unsigned r = 0; r <= p; ++r) EXPECT_EQ(stirling2(p, r), Natural(oracle::count_set_partitions(p, r)));
  }
}

TEST(OccupancyProperties, OracleEquivalence) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned p = 0; p <= 6; ++p) {
      for (unsigned r = 0; r <= n; ++r) {
        const auto result = occupancy({n, p, r}, true);
        ASSERT_TRUE(result.agrees().has_value());
        EXPECT_TRUE(*result.agrees()) << n << " " << p << " " << r;
      }
    }
  }
}

TEST(OccupancyProperties, TotalCountPartition) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned p = 0; p <= 8; ++p) {
      Natural total;
      for (unsigned r = 0; r <= n; ++r) total += exact_occupancy_count({n, p, r});
      EXPECT_EQ(total, pow(Natural(n), p)) << n << " " << p;
    }
  }
}

TEST(OccupancyProperties, StirlingLink) {
  for (unsigned p = 0; p <= 15; ++p) {
    for (unsigned r = 0; r <= 15; ++r) EXPECT_EQ(surjection_count(r, p), factorial(r) * stirling2(p, r));
  }
}

TEST(OccupancyProperties, PowerSumLaws) {
  for (unsigned n = 2; n <= 30; ++n) {
    for (unsigned p = 1; p < n; ++p) EXPECT_TRUE(alternating_power_sum(n, p).is_zero()) << n << " " << p;
  }
  for (unsigned p = 1; p <= 20; ++p) {
    Integer expected = factorial(p);
    if (p % 2 == 0) expected = -expected;
    EXPECT_EQ(alternating_power_sum(p, p), expected) << p;
  }
}

TEST(OccupancyProperties, BridgeToDifferenceCalculus) {
  for (unsigned n = 0; n <= 12; ++n) {
    const Rational at_n = alternating_sum_numeric(Polynomial::monomial(n), {n, 1}, Rational(Natural(n)));
    EXPECT_EQ(at_n, Rational(surjection_count(n, n)));
    EXPECT_EQ(at_n, Rational(factorial(n)));
  }
}
