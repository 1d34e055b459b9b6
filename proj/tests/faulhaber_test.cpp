#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "graduation/faulhaber.hpp"

using namespace graduation;

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(6), Rational(1, 42));
}

TEST(Bernoulli, LegibleTableEntries) {
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(8), Rational(-1, 30));
  EXPECT_EQ(bernoulli(10), Rational(5, 66));
  EXPECT_EQ(bernoulli(12), Rational(BigInt(-691), BigInt(2730)));
}

TEST(Bernoulli, OddIndicesAboveOneVanish) {
  for (std::size_t k = 3; k <= 25; k += 2) EXPECT_TRUE(bernoulli(k).is_zero()) << k;
}

TEST(Bernoulli, RecurrenceHoldsBeyondDefaultTable) {
  // B_70 lies past the preseeded range; check sum_{j<=k} C(k+1,j) B_j = 0 at k = 70.
  const std::size_t k = 70;
  Rational acc;
  BigInt binom = 1;
  for (std::size_t j = 0; j <= k; ++j) {
    acc += Rational(binom) * bernoulli(j);
    binom = binom * BigInt(k + 1 - j) / BigInt(j + 1);
  }
  EXPECT_TRUE(acc.is_zero());
  EXPECT_GE(bernoulli_table().size(), k + 1);
  // Even-index signs alternate: B_{2j} > 0 iff j is odd.
  EXPECT_LT(bernoulli(68).sign(), 0);
  EXPECT_GT(bernoulli(70).sign(), 0);
}

TEST(Bernoulli, ConcurrentAccessAgrees) {
  std::vector<std::thread> workers;
  std::vector<Rational> seen(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &seen] { seen[t] = bernoulli(90 + 2 * (t % 2)); });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) EXPECT_EQ(seen[t], bernoulli(90 + 2 * (t % 2)));
}

TEST(FaulhaberSum, Examples) {
  EXPECT_EQ(faulhaber_sum(2, 3), Rational(14));
  EXPECT_EQ(faulhaber_sum(1, 10), Rational(55));
  EXPECT_EQ(faulhaber_sum(10, 1000), brute_force_power_sum(10, 1000));
  EXPECT_EQ(faulhaber_sum(0, 5), Rational(5));
  EXPECT_EQ(faulhaber_sum(3, 0), Rational(0));
}

TEST(BruteForcePowerSum, Examples) {
  EXPECT_EQ(brute_force_power_sum(0, 5), Rational(5));
  EXPECT_EQ(brute_force_power_sum(3, 4), Rational(100));
  EXPECT_EQ(brute_force_power_sum(7, 100), faulhaber_sum(7, 100));
}

TEST(FaulhaberSum, MatchesPrefixSumsForSmallDegrees) {
  for (unsigned m = 0; m <= 12; ++m) {
    const auto prefix = brute_force_power_prefix_sums(m, 2000);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
      ASSERT_EQ(faulhaber_sum(m, n), Rational(prefix[n])) << "m=" << m << " n=" << n;
    }
  }
}

TEST(FaulhaberSum, HighDegreeUsesExtendedBernoulliTable) {
  EXPECT_EQ(faulhaber_sum(70, 50), brute_force_power_sum(70, 50));
}

TEST(FaulhaberSum, ResultsAreIntegers) {
  for (unsigned m = 0; m <= 20; ++m) EXPECT_TRUE(faulhaber_sum(m, 123456789).is_integer());
}
