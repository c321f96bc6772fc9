#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "normcount/factorint.hpp"

using namespace normcount;
using u64 = std::uint64_t;

namespace {

u64 reconstruct(const PrimeFactorization &f) {
  u64 n = 1;
  for (const auto &[p, e] : f.factors)
    for (unsigned i = 0; i < e; ++i) n *= p;
  return n;
}

}  // namespace

TEST_CASE("is_prime basics") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(997));
  CHECK_FALSE(is_prime(999));
  CHECK(is_prime(2'147'483'647));  // 2^31 - 1
  CHECK(is_prime(18'446'744'073'709'551'557ULL));  // largest 64-bit prime
}

TEST_CASE("is_prime rejects the strong-pseudoprime stress value") {
  // 3215031751 = 151 * 751 * 28351 fools several small base sets.
  CHECK(151ULL * 751 * 28351 == 3'215'031'751ULL);
  CHECK_FALSE(is_prime(3'215'031'751ULL));
  CHECK(is_prime(151));
  CHECK(is_prime(751));
  CHECK(is_prime(28351));
}

TEST_CASE("factorize examples") {
  const auto f24 = factorize(24);
  CHECK(f24.factors == std::vector<PrimePower>{{2, 3}, {3, 1}});

  CHECK(factorize(1).factors.empty());

  // 5336100 = 2^2 3^2 5^2 7^2 11^2 = (2*3*5*7*11)^2 = 2310^2
  CHECK(2310ULL * 2310 == 5'336'100ULL);
  const auto f = factorize(5'336'100);
  CHECK(f.factors == std::vector<PrimePower>{{2, 2}, {3, 2}, {5, 2}, {7, 2}, {11, 2}});

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize handles hard 64-bit composites") {
  // two 32-bit primes, out of reach of trial division
  const u64 p = 4'294'967'291ULL, q = 4'294'967'279ULL;
  const auto f = factorize(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{q, 1});
  CHECK(f.factors[1] == PrimePower{p, 1});

  // prime square above the trial bound
  const u64 r = 1'000'003;
  CHECK(factorize(r * r).factors == std::vector<PrimePower>{{r, 2}});
}

TEST_CASE("factorize invariants over 1..1e5") {
  for (u64 n = 1; n <= 100'000; ++n) {
    const auto f = factorize(n);
    CHECK(reconstruct(f) == n);
    u64 previous = 0;
    for (const auto &[p, e] : f.factors) {
      CHECK(p > previous);
      CHECK(e >= 1);
      CHECK(is_prime(p));
      previous = p;
    }
  }
}

TEST_CASE("factorize round-trips random 64-bit inputs") {
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 1000; ++i) {
    const u64 n = rng() | 1;  // skew odd so rho gets real work
    const auto f = factorize(n);
    CHECK(reconstruct(f) == n);
    for (const auto &[p, e] : f.factors) CHECK(is_prime(p));
  }
}

TEST_CASE("split_two_adic") {
  CHECK(split_two_adic(8).e == 3);
  CHECK(split_two_adic(8).odd == 1);
  CHECK(split_two_adic(72).e == 3);
  CHECK(split_two_adic(72).odd == 9);
  CHECK(split_two_adic(15).e == 0);
  CHECK(split_two_adic(15).odd == 15);
  CHECK_THROWS_AS(split_two_adic(0), std::invalid_argument);

  for (u64 n = 1; n <= 100'000; ++n) {
    unsigned e = 0;
    u64 odd = n;
    while (odd % 2 == 0) {
      odd /= 2;
      ++e;
    }
    const auto split = split_two_adic(n);
    CHECK(split.e == e);
    CHECK(split.odd == odd);
  }
}

TEST_CASE("prime_signature") {
  CHECK(prime_signature(factorize(24)) == std::vector<unsigned>{3, 1});
  CHECK(prime_signature(factorize(375)) == std::vector<unsigned>{3, 1});
  CHECK(prime_signature(factorize(24)) == prime_signature(factorize(375)));
  CHECK(prime_signature(factorize(1)).empty());
}
