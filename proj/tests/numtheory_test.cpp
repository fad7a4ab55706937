#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "nplab/error.hpp"
#include "nplab/numtheory.hpp"
#include "support/oracles.hpp"

namespace nplab {
namespace {

void expect_valid_bijection(std::uint64_t n, const Interval& iv) {
  const auto image = coprime_bijection(n, iv);
  ASSERT_EQ(image.size(), n);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const auto fi = image[i - 1];
    EXPECT_TRUE(iv.contains(fi));
    EXPECT_EQ(std::gcd(i, fi), 1u) << "i=" << i << " f(i)=" << fi;
    seen.insert(fi);
  }
  EXPECT_EQ(seen.size(), n);
}

TEST(Sieve, SmallLimits) {
  EXPECT_EQ(sieve_primes(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_TRUE(sieve_primes(1).empty());
  EXPECT_TRUE(sieve_primes(0).empty());
  EXPECT_EQ(sieve_primes(2), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(sieve_primes(5000), oracle::primes_by_trial_division(5000));
}

TEST(PrimePi, MatchesSieve) {
  EXPECT_EQ(prime_pi(10), 4u);
  EXPECT_EQ(prime_pi(1), 0u);
  EXPECT_EQ(prime_pi(2), 1u);
  EXPECT_EQ(prime_pi(100), 25u);
  EXPECT_EQ(prime_pi(50), 15u);
  std::uint64_t previous = 0;
  for (std::uint64_t x = 0; x <= 3000; ++x) {
    const auto pi = prime_pi(x);
    ASSERT_GE(pi, previous);
    ASSERT_EQ(pi, sieve_primes(x).size());
    previous = pi;
  }
}

TEST(Interval, Members) {
  const Interval iv{9, 4};
  EXPECT_EQ(iv.last(), 12u);
  EXPECT_TRUE(iv.contains(9));
  EXPECT_TRUE(iv.contains(12));
  EXPECT_FALSE(iv.contains(13));
  EXPECT_FALSE(iv.contains(8));
}

TEST(Pillai, Examples) {
  EXPECT_EQ(pillai_select({1, 16}), 1u);
  EXPECT_EQ(pillai_select({8, 8}), 11u);
  EXPECT_EQ(pillai_select({5, 1}), 5u);
}

TEST(Pillai, SmallestWitnessIsReturned) {
  for (std::uint64_t start = 1; start <= 400; ++start) {
    for (std::uint64_t len = 1; len <= 16; ++len) {
      const auto x = pillai_select({start, len});
      ASSERT_TRUE(x.has_value()) << start << "+" << len;
      for (std::uint64_t y = start; y < start + len; ++y) {
        if (y != *x) ASSERT_EQ(std::gcd(*x, y), 1u);
      }
      for (std::uint64_t z = start; z < *x; ++z) {
        bool isolated = true;
        for (std::uint64_t y = start; y < start + len; ++y) {
          if (y != z && std::gcd(z, y) != 1) isolated = false;
        }
        ASSERT_FALSE(isolated) << "smaller witness " << z;
      }
    }
  }
}

TEST(Pillai, FirstLength17Failure) {
  const auto first = oracle::first_pillai_failure(17);
  EXPECT_EQ(first, 2184u);
  EXPECT_FALSE(pillai_select({first, 17}).has_value());
  for (std::uint64_t s = 1; s < first; ++s) {
    ASSERT_TRUE(pillai_select({s, 17}).has_value()) << s;
  }
}

TEST(CoprimeBijection, Examples) {
  EXPECT_EQ(coprime_bijection(1, {7, 1}), (std::vector<std::uint64_t>{7}));
  expect_valid_bijection(3, {4, 3});
  expect_valid_bijection(4, {9, 4});
  EXPECT_THROW(coprime_bijection(3, {4, 4}), PreconditionError);
}

TEST(CoprimeBijection, Deterministic) {
  EXPECT_EQ(coprime_bijection(40, {41, 40}), coprime_bijection(40, {41, 40}));
}

TEST(CoprimeBijection, ValidForManyStarts) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t start : {n + 1, 2 * n, std::uint64_t{10000}, std::uint64_t{1}, n * n}) {
      expect_valid_bijection(n, {start, n});
    }
  }
}

}  // namespace
}  // namespace nplab
