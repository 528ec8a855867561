#include "gengraph/numtheory.hpp"

#include "gengraph/errors.hpp"

namespace gengraph {

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

TotientProfile totient_profile(std::uint64_t n) {
  TotientProfile tp;
  tp.factorization = factorize(n);
  for (auto [p, e] : tp.factorization) tp.phi *= ipow(p, e - 1) * (p - 1);
  tp.pi = static_cast<unsigned>(tp.factorization.size());
  return tp;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::uint64_t odd_prime(unsigned k) {
  if (k == 0) throw PreconditionError("odd_prime: index is 1-based");
  std::uint64_t p = 1;
  while (k > 0) {
    p += 2;
    if (is_prime(p)) --k;
  }
  return p;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(n)) r *= p;
  return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace gengraph
