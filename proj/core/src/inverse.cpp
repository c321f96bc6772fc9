#include "normcount/inverse.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

#include "normcount/partition.hpp"

namespace normcount {
namespace {

using u64 = std::uint64_t;

// Largest m with 2 <= m <= ceiling and P(m) <= n, or 1 if none.
unsigned largest_usable_exponent(u64 n, unsigned ceiling, std::span<const u64> partition) {
  const auto last = partition.begin() + std::min<std::size_t>(ceiling + 1, partition.size());
  auto it = std::upper_bound(partition.begin() + 2, last, n);
  const auto m = static_cast<unsigned>(it - partition.begin()) - 1;
  return m;
}

// Divisor descent over partition numbers, exponents chosen nonincreasing so
// each multiset is produced exactly once, largest exponent first.
void collect_factorizations(u64 n, unsigned ceiling, std::span<const u64> partition,
                            std::vector<unsigned> &current,
                            std::vector<ExponentMultiset> &out) {
  if (n == 1) {
    out.push_back({current});
    return;
  }
  for (unsigned m = largest_usable_exponent(n, ceiling, partition); m >= 2; --m) {
    if (n % partition[m] != 0) continue;
    current.push_back(m);
    collect_factorizations(n / partition[m], m, partition, current, out);
    current.pop_back();
  }
}

bool has_factorization(u64 n, unsigned ceiling, std::span<const u64> partition) {
  if (n == 1) return true;
  for (unsigned m = largest_usable_exponent(n, ceiling, partition); m >= 2; --m) {
    if (n % partition[m] == 0 && has_factorization(n / partition[m], m, partition))
      return true;
  }
  return false;
}

// Any 64-bit count factors into at most 63 partition numbers >= 2, so 64
// primes always suffice for the assignment.
std::span<const u64> ascending_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 p = 2; out.size() < 65; ++p) {
      bool prime = p >= 2;
      for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) {
          prime = false;
          break;
        }
      if (prime) out.push_back(p);
    }
    return out;
  }();
  return primes;
}

// prod primes[i]^exponents[i]; exponents are nonincreasing, so the largest
// lands on the smallest prime. nullopt when the product leaves 64 bits.
std::optional<u64> assigned_order(std::span<const unsigned> exponents,
                                  std::span<const u64> primes) {
  u64 value = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (unsigned rep = 0; rep < exponents[i]; ++rep)
      if (__builtin_mul_overflow(value, primes[i], &value)) return std::nullopt;
  return value;
}

InverseResult minimize_over_factorizations(u64 n, std::span<const u64> primes,
                                           const char *what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
  const auto multisets = partition_factorizations(n);
  if (multisets.empty()) return {};

  InverseResult best;
  for (const auto &multiset : multisets) {
    const auto order = assigned_order(multiset.exponents, primes);
    if (!order) continue;  // cannot be minimal if any candidate fits
    if (!best.value || *order < *best.value) {
      best.value = *order;
      best.witness = multiset;
    }
  }
  if (!best.value)
    throw std::overflow_error(std::string(what) + ": every candidate order for n = " +
                              std::to_string(n) + " exceeds 64 bits");
  return best;
}

}  // namespace

std::vector<ExponentMultiset> partition_factorizations(u64 n) {
  if (n == 0) throw std::invalid_argument("partition_factorizations: n must be positive");
  const auto partition = PartitionTable::uint64_limit().values();
  std::vector<ExponentMultiset> out;
  std::vector<unsigned> current;
  collect_factorizations(n, PartitionTable::uint64_limit().max_index(), partition, current, out);
  return out;
}

bool is_partition_product(u64 n) {
  if (n == 0) throw std::invalid_argument("is_partition_product: n must be positive");
  const auto &table = PartitionTable::uint64_limit();
  return has_factorization(n, table.max_index(), table.values());
}

InverseResult smallest_abelian_index(u64 n) {
  return minimize_over_factorizations(n, ascending_primes(), "smallest_abelian_index");
}

InverseResult smallest_hamiltonian_index(u64 n) {
  auto result = minimize_over_factorizations(n, ascending_primes().subspan(1),
                                             "smallest_hamiltonian_index");
  if (result.value) {
    u64 order = *result.value;
    if (__builtin_mul_overflow(order, u64{8}, &order))
      throw std::overflow_error("smallest_hamiltonian_index: 8 * odd index for n = " +
                                std::to_string(n) + " exceeds 64 bits");
    result.value = order;
  }
  return result;
}

}  // namespace normcount
