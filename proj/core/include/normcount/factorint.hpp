#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace normcount {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend auto operator<=>(const PrimePower &, const PrimePower &) = default;
};

// Exact factorization of a positive 64-bit integer. Primes are strictly
// increasing, every exponent is >= 1, and n == 1 carries an empty list.
struct PrimeFactorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

// n = 2^e * odd.
struct TwoAdicSplit {
  unsigned e = 0;
  std::uint64_t odd = 1;
};

// Deterministic over the whole 64-bit range: Miller-Rabin with the first
// twelve primes as bases, which has no composite exceptions below 2^64.
// is_prime(1) == false.
bool is_prime(std::uint64_t n) noexcept;

// Trial division by primes below 1000, then Pollard rho with Brent cycle
// detection on whatever composite remains. Throws std::invalid_argument
// for n == 0.
PrimeFactorization factorize(std::uint64_t n);

// Throws std::invalid_argument for n == 0.
TwoAdicSplit split_two_adic(std::uint64_t n);

// Exponents sorted descending, e.g. 24 = 2^3 * 3 -> {3, 1}.
std::vector<unsigned> prime_signature(const PrimeFactorization &f);

}  // namespace normcount
