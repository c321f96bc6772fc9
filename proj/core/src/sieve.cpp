#include "normcount/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "normcount/partition.hpp"

namespace normcount {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && u128{r} * r > n) --r;
  while (u128{r + 1} * (r + 1) <= n) ++r;
  return r;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (u64 q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

void check_window(u64 lo, u64 hi, const SieveConfig &config) {
  if (lo == 0 || lo > hi)
    throw std::invalid_argument("sieve: need 1 <= lo <= hi, got lo = " + std::to_string(lo) +
                                ", hi = " + std::to_string(hi));
  if (hi > config.max_n)
    throw std::length_error("sieve budget exceeded: hi = " + std::to_string(hi) +
                            " is past the configured max_n = " + std::to_string(config.max_n));
  if (config.segment_size == 0)
    throw std::invalid_argument("sieve: segment_size must be positive");
}

}  // namespace

void sieve_counts(u64 lo, u64 hi,
                  const std::function<void(u64, u64, u64)> &visit,
                  const SieveConfig &config) {
  check_window(lo, hi, config);

  const std::span<const u64> partition = PartitionTable::uint64_limit().values();
  const std::vector<u64> primes = primes_up_to(isqrt(hi));

  // Per position: the product of P(alpha_p) over odd primes p with p^2 | n.
  // Odd primes dividing n exactly once contribute P(1) = 1, so only
  // multiples of p^2 are ever touched; the expected work per position is
  // sum 1/p^2 over odd p, about 0.2. The 2-part comes from the trailing
  // zero bits instead. a(n) <= P(63) < 2^31 for any 64-bit n, so none of
  // the products below can overflow.
  std::vector<u64> odd_square_part;
  u64 seg_lo = lo;
  for (;;) {
    const u64 seg_hi = seg_lo + std::min(config.segment_size - 1, hi - seg_lo);
    const auto len = static_cast<u64>(seg_hi - seg_lo + 1);
    odd_square_part.assign(len, 1);

    for (u64 p : primes) {
      if (p == 2) continue;
      const u64 p_squared = p * p;
      if (p_squared > seg_hi) break;
      const u128 first = (u128{seg_lo} + p_squared - 1) / p_squared * p_squared;
      if (first > seg_hi) continue;
      for (u64 off = static_cast<u64>(first) - seg_lo; off < len; off += p_squared) {
        const u64 m = seg_lo + off;
        u64 rest = m / p_squared;
        unsigned exponent = 2;
        while (rest % p == 0) {
          rest /= p;
          ++exponent;
        }
        odd_square_part[off] *= partition[exponent];
      }
    }

    for (u64 off = 0; off < len; ++off) {
      const u64 n = seg_lo + off;
      const auto two_exp = static_cast<unsigned>(std::countr_zero(n));
      const u64 odd_count = odd_square_part[off];
      visit(n, partition[two_exp] * odd_count, two_exp >= 3 ? odd_count : 0);
    }

    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
}

std::vector<u64> sieve_range(SequenceKind kind, u64 lo, u64 hi, const SieveConfig &config) {
  check_window(lo, hi, config);
  const u64 points = hi - lo + 1;
  if (points > config.max_points)
    throw std::length_error("range budget exceeded: " + std::to_string(points) +
                            " values are past the configured max_points = " +
                            std::to_string(config.max_points));

  std::vector<u64> out;
  out.reserve(static_cast<std::size_t>(points));
  const bool running_sum = is_cumulative(kind);
  u64 sum = 0;
  sieve_counts(running_sum ? 1 : lo, hi, [&](u64 n, u64 a, u64 h) {
    u64 point = 0;
    switch (kind) {
      case SequenceKind::A:
      case SequenceKind::U: point = a; break;
      case SequenceKind::H:
      case SequenceKind::V: point = h; break;
      case SequenceKind::B:
      case SequenceKind::W: point = a + h; break;
    }
    if (running_sum) {
      if (__builtin_add_overflow(sum, point, &sum))
        throw std::overflow_error("cumulative sum exceeds 64 bits at n = " + std::to_string(n));
      if (n >= lo) out.push_back(sum);
    } else {
      out.push_back(point);
    }
  }, config);
  return out;
}

u64 cumulative(SequenceKind kind, u64 n, const SieveConfig &config) {
  if (!is_cumulative(kind))
    throw std::invalid_argument("cumulative: kind must be one of u, v, w");
  u64 sum = 0;
  sieve_counts(1, n, [&](u64 at, u64 a, u64 h) {
    const u64 point = kind == SequenceKind::U ? a : kind == SequenceKind::V ? h : a + h;
    if (__builtin_add_overflow(sum, point, &sum))
      throw std::overflow_error("cumulative sum exceeds 64 bits at n = " + std::to_string(at));
  }, config);
  return sum;
}

}  // namespace normcount
