#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace nplab {

/// Primes <= limit, ascending.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Number of primes <= x.
std::uint64_t prime_pi(std::uint64_t x);

/// The integers start, start + 1, ..., start + length - 1.
struct Interval {
  std::uint64_t start = 1;
  std::uint64_t length = 1;

  std::uint64_t last() const noexcept { return start + length - 1; }
  bool contains(std::uint64_t x) const noexcept { return x >= start && x <= last(); }
};

/// Smallest member of `iv` coprime to every other member, if any. Always
/// present for length <= 16.
std::optional<std::uint64_t> pillai_select(const Interval& iv);

/// A bijection f from {1..n} onto `iv` with gcd(i, f(i)) = 1 for all i,
/// returned as image[i - 1] = f(i). Built as a perfect matching by
/// augmenting paths, trying i and candidates in ascending order, so the
/// result is deterministic. Throws PreconditionError when iv.length != n and
/// InternalError if no matching is found.
std::vector<std::uint64_t> coprime_bijection(std::uint64_t n, const Interval& iv);

}  // namespace nplab
