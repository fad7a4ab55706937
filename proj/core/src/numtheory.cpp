#include "nplab/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nplab/error.hpp"

namespace nplab {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

std::uint64_t prime_pi(std::uint64_t x) { return sieve_primes(x).size(); }

std::optional<std::uint64_t> pillai_select(const Interval& iv) {
  if (iv.length == 0) throw PreconditionError("interval must not be empty");
  for (std::uint64_t x = iv.start; x <= iv.last(); ++x) {
    bool ok = true;
    for (std::uint64_t y = iv.start; y <= iv.last() && ok; ++y) {
      if (y != x && std::gcd(x, y) != 1) ok = false;
    }
    if (ok) return x;
  }
  return std::nullopt;
}

namespace {

class CoprimeMatcher {
 public:
  CoprimeMatcher(std::uint64_t n, const Interval& iv)
      : n_(n), iv_(iv), image_(n + 1, 0), preimage_(n, 0), seen_(n, false) {}

  bool run() {
    for (std::uint64_t i = 1; i <= n_; ++i) {
      std::fill(seen_.begin(), seen_.end(), false);
      if (!augment(i)) return false;
    }
    return true;
  }

  std::vector<std::uint64_t> result() const {
    return std::vector<std::uint64_t>(image_.begin() + 1, image_.end());
  }

 private:
  // Recursion depth is bounded by n, which stays small in practice.
  bool augment(std::uint64_t i) {
    for (std::uint64_t slot = 0; slot < n_; ++slot) {
      const std::uint64_t y = iv_.start + slot;
      if (seen_[slot] || std::gcd(i, y) != 1) continue;
      seen_[slot] = true;
      if (preimage_[slot] == 0 || augment(preimage_[slot])) {
        preimage_[slot] = i;
        image_[i] = y;
        return true;
      }
    }
    return false;
  }

  std::uint64_t n_;
  Interval iv_;
  std::vector<std::uint64_t> image_;
  std::vector<std::uint64_t> preimage_;
  std::vector<bool> seen_;
};

}  // namespace

std::vector<std::uint64_t> coprime_bijection(std::uint64_t n, const Interval& iv) {
  if (n == 0) throw PreconditionError("coprime bijection needs n >= 1");
  if (iv.length != n) {
    throw PreconditionError("interval length " + std::to_string(iv.length) +
                            " differs from n = " + std::to_string(n));
  }
  CoprimeMatcher matcher(n, iv);
  if (!matcher.run()) {
    throw InternalError("no coprime bijection onto [" + std::to_string(iv.start) + ", " +
                        std::to_string(iv.last()) + "]");
  }
  return matcher.result();
}

}  // namespace nplab
