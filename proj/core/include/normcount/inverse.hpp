#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace normcount {

// Search state for the inverse sequences: exponents nonincreasing, each
// >= 2, with the product of P(exponent) over the list equal to the count
// being inverted. Exponent 1 never appears: P(1) = 1 leaves the count
// unchanged while strictly growing the group order.
struct ExponentMultiset {
  std::vector<unsigned> exponents;

  friend auto operator<=>(const ExponentMultiset &, const ExponentMultiset &) = default;
};

struct InverseResult {
  // Absent <=> no group order achieves the count (n is not a product of
  // partition numbers). The CLI renders absent as 0.
  std::optional<std::uint64_t> value;
  // Exponent multiset realizing the minimum, when one exists.
  std::optional<ExponentMultiset> witness;
};

// Every multiset {m_i >= 2} with prod P(m_i) == n, each exactly once in
// canonical nonincreasing form. n == 1 yields the single empty multiset.
// Throws std::invalid_argument for n == 0.
std::vector<ExponentMultiset> partition_factorizations(std::uint64_t n);

// True iff n is a product of partition numbers >= 2 (n == 1: empty product).
bool is_partition_product(std::uint64_t n);

// S_a(n): the smallest k with exactly n abelian groups of order k. Over
// every factorization of n into partition numbers, exponents are assigned
// nonincreasing to the primes 2, 3, 5, ... and the smallest resulting
// order wins. Candidates overflowing 64 bits are pruned; if every
// candidate overflows, throws std::overflow_error.
InverseResult smallest_abelian_index(std::uint64_t n);

// S_h(n): the smallest k with exactly n hamiltonian groups of order k,
// i.e. 8 times the minimal index built over the odd primes 3, 5, 7, ...
// Absent exactly when S_a(n) is absent.
InverseResult smallest_hamiltonian_index(std::uint64_t n);

}  // namespace normcount
