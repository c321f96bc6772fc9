#include "normcount/factorint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace normcount {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Double-width intermediates keep every modular product exact.
u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One strong-pseudoprime round. n odd, n > 2, a already reduced mod n.
bool strong_probable_prime(u64 n, u64 a) {
  const int s = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> s;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// The first twelve primes as bases: no composite below 2^64 passes all of
// them, so the test is deterministic over the full input range.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr u64 kTrialBound = 1000;

const std::vector<u64> &trial_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    std::array<bool, kTrialBound> composite{};
    for (u64 p = 2; p < kTrialBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (u64 q = p * p; q < kTrialBound; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

// Brent-cycle Pollard rho. Expects n odd, composite, with no prime factor
// below kTrialBound. Always returns a nontrivial divisor.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    const auto step = [n, c](u64 v) {
      return static_cast<u64>((u128{mul_mod(v, v, n)} + c) % n);
    };
    u64 x = 2, y = 2, ys = 2, q = 1, g = 1;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 done = 0; done < r && g == 1; done += batch) {
        ys = y;
        const u64 steps = std::min(batch, r - done);
        for (u64 i = 0; i < steps; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // The batched gcd overshot the meeting point; replay one step at a time.
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
    // Degenerate cycle for this increment; try the next one.
  }
}

void factor_remaining(u64 n, std::vector<u64> &out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  factor_remaining(d, out);
  factor_remaining(n / d, out);
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {u64{2}, u64{3}, u64{5}, u64{7}}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : kWitnesses) {
    if (a % n == 0) continue;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

PrimeFactorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");

  PrimeFactorization result;
  result.n = n;

  u64 rest = n;
  for (u64 p : trial_primes()) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }

  if (rest == 1) return result;
  if (rest < kTrialBound * kTrialBound || is_prime(rest)) {
    // No divisor below kTrialBound survived, so a small cofactor is prime.
    result.factors.push_back({rest, 1});
    return result;
  }

  std::vector<u64> hard;
  factor_remaining(rest, hard);
  std::sort(hard.begin(), hard.end());
  for (std::size_t i = 0; i < hard.size();) {
    std::size_t j = i;
    while (j < hard.size() && hard[j] == hard[i]) ++j;
    result.factors.push_back({hard[i], static_cast<unsigned>(j - i)});
    i = j;
  }
  return result;
}

TwoAdicSplit split_two_adic(u64 n) {
  if (n == 0) throw std::invalid_argument("split_two_adic: n must be positive");
  const auto e = static_cast<unsigned>(std::countr_zero(n));
  return {e, n >> e};
}

std::vector<unsigned> prime_signature(const PrimeFactorization &f) {
  std::vector<unsigned> exponents;
  exponents.reserve(f.factors.size());
  for (const auto &pp : f.factors) exponents.push_back(pp.exponent);
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return exponents;
}

}  // namespace normcount
