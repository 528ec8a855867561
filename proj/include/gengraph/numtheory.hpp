#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gengraph {

using PrimePower = std::pair<std::uint64_t, unsigned>;  // (prime, exponent)

struct TotientProfile {
  std::vector<PrimePower> factorization;  // primes ascending
  std::uint64_t phi = 1;
  unsigned pi = 0;  // number of distinct prime divisors
};

std::vector<PrimePower> factorize(std::uint64_t n);
TotientProfile totient_profile(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// The k-th odd prime, 1-based: 3, 5, 7, 11, ...
std::uint64_t odd_prime(unsigned k);

/// Product of the distinct primes dividing n (1 for n = 1).
std::uint64_t radical(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace gengraph
