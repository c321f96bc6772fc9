#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "normcount/groupcount.hpp"

namespace normcount {

struct SieveConfig {
  // Window width of one segment; working memory is one 64-bit word per
  // position regardless of how large [lo, hi] is.
  std::uint64_t segment_size = std::uint64_t{1} << 20;
  // Largest admissible hi; keeps the base prime list (primes <= sqrt(hi))
  // small and guards against runaway requests.
  std::uint64_t max_n = std::uint64_t{1} << 40;
  // Largest range sieve_range is willing to materialize as a vector.
  std::uint64_t max_points = std::uint64_t{1} << 27;
};

// Streams (n, a(n), h(n)) for n = lo..hi in ascending order, computed in
// fixed-size segments. Exponents are extracted by striking multiples of
// p^2 for each odd prime p <= sqrt(hi) -- positions where every prime
// contributes only the trivial partition factor P(1) = 1 are never
// touched -- and the 2-part is read off the trailing zero bits. No per-n
// factorization happens. Output is independent of segment_size.
// Throws std::invalid_argument for lo == 0 or lo > hi, std::length_error
// past the max_n budget.
void sieve_counts(std::uint64_t lo, std::uint64_t hi,
                  const std::function<void(std::uint64_t n, std::uint64_t a,
                                           std::uint64_t h)> &visit,
                  const SieveConfig &config = {});

// Values for n = lo..hi: point values for A/H/B, running cumulative sums
// (accumulated from n = 1, whatever lo is) for U/V/W. Throws
// std::length_error when the range exceeds max_points and
// std::overflow_error if a cumulative sum leaves 64 bits.
std::vector<std::uint64_t> sieve_range(SequenceKind kind, std::uint64_t lo,
                                       std::uint64_t hi,
                                       const SieveConfig &config = {});

// u(n), v(n) or w(n): one streamed pass, no per-n storage. kind must be
// cumulative.
std::uint64_t cumulative(SequenceKind kind, std::uint64_t n,
                         const SieveConfig &config = {});

}  // namespace normcount
