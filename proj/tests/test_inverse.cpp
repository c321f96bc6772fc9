#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "normcount/groupcount.hpp"
#include "normcount/inverse.hpp"
#include "normcount/partition.hpp"
#include "normcount/sieve.hpp"

using namespace normcount;
using u64 = std::uint64_t;

namespace {

// Independent oracle: unordered divisor search over the partition-number
// set {2, 3, 5, 7, 11, 15, 22, 30, 42, ...} with memoization, sharing no
// code with the canonical enumerator.
bool divides_into_partition_numbers(u64 n, const std::vector<u64> &pnums,
                                    std::map<u64, bool> &memo) {
  if (n == 1) return true;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  bool found = false;
  for (u64 v : pnums) {
    if (v > n) break;
    if (n % v == 0 && divides_into_partition_numbers(n / v, pnums, memo)) {
      found = true;
      break;
    }
  }
  memo[n] = found;
  return found;
}

std::vector<u64> exponents_to_values(const ExponentMultiset &multiset) {
  std::vector<u64> values;
  for (unsigned m : multiset.exponents) values.push_back(partition_number(m));
  return values;
}

}  // namespace

TEST_CASE("partition_factorizations examples") {
  const auto f4 = partition_factorizations(4);
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].exponents == std::vector<unsigned>{2, 2});  // 4 = P(2) * P(2)

  CHECK(partition_factorizations(13).empty());

  const auto f6 = partition_factorizations(6);
  REQUIRE(f6.size() == 1);
  CHECK(f6[0].exponents == std::vector<unsigned>{3, 2});  // 6 = P(3) * P(2)

  const auto f1 = partition_factorizations(1);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].exponents.empty());

  // 30 = P(9) = P(4) * P(3) * P(2) = ... has several decompositions
  const auto f30 = partition_factorizations(30);
  CHECK(f30.size() >= 2);

  CHECK_THROWS_AS(partition_factorizations(0), std::invalid_argument);
}

TEST_CASE("every factorization is canonical and multiplies back") {
  for (u64 n = 1; n <= 3000; ++n) {
    const auto factorizations = partition_factorizations(n);
    for (const auto &multiset : factorizations) {
      CHECK(std::is_sorted(multiset.exponents.rbegin(), multiset.exponents.rend()));
      u64 product = 1;
      for (unsigned m : multiset.exponents) {
        CHECK(m >= 2);
        product *= partition_number(m);
      }
      CHECK(product == n);
    }
    // no duplicates in canonical form
    auto sorted = factorizations;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("enumeration completeness against the divisor-search oracle") {
  std::vector<u64> pnums;
  const auto &table = PartitionTable::uint64_limit();
  for (unsigned m = 2; table.at(m) <= 10'000; ++m) pnums.push_back(table.at(m));
  std::map<u64, bool> memo;
  for (u64 n = 1; n <= 10'000; ++n) {
    const bool oracle = divides_into_partition_numbers(n, pnums, memo);
    CHECK(is_partition_product(n) == oracle);
    CHECK(partition_factorizations(n).empty() == !oracle);
  }
}

TEST_CASE("is_partition_product examples") {
  CHECK(is_partition_product(1));
  CHECK_FALSE(is_partition_product(26));
  CHECK(is_partition_product(30));
}

TEST_CASE("smallest_abelian_index table values") {
  CHECK(smallest_abelian_index(1).value == 1);
  CHECK(smallest_abelian_index(2).value == 4);
  CHECK(smallest_abelian_index(4).value == 36);
  CHECK_FALSE(smallest_abelian_index(13).value.has_value());
  CHECK_FALSE(smallest_abelian_index(13).witness.has_value());
  CHECK(smallest_abelian_index(32).value == 5'336'100);
  CHECK_THROWS_AS(smallest_abelian_index(0), std::invalid_argument);
}

TEST_CASE("overflowing candidates prune, all-overflow reports explicitly") {
  // P(64) = 1741630 factors only as [64]; the assigned order 2^64 does not fit.
  const auto f = partition_factorizations(1'741'630);
  REQUIRE(f.size() == 1);
  CHECK(f[0].exponents == std::vector<unsigned>{64});
  CHECK(is_partition_product(1'741'630));
  CHECK_THROWS_AS(smallest_abelian_index(1'741'630), std::overflow_error);
  CHECK_THROWS_AS(smallest_hamiltonian_index(1'741'630), std::overflow_error);
}

TEST_CASE("smallest_hamiltonian_index table values") {
  CHECK(smallest_hamiltonian_index(1).value == 8);
  CHECK(smallest_hamiltonian_index(4).value == 1800);  // 8 * 3^2 * 5^2
  CHECK(smallest_hamiltonian_index(16).value == 10'672'200);
  CHECK_FALSE(smallest_hamiltonian_index(13).value.has_value());
}

TEST_CASE("witnesses evaluate back to their target") {
  for (u64 n = 1; n <= 60; ++n) {
    const auto result = smallest_abelian_index(n);
    if (!result.value) continue;
    REQUIRE(result.witness.has_value());
    CHECK(count_abelian(*result.value) == n);
    u64 product = 1;
    for (u64 v : exponents_to_values(*result.witness)) product *= v;
    CHECK(product == n);
  }
  for (u64 n = 1; n <= 30; ++n) {
    const auto result = smallest_hamiltonian_index(n);
    if (!result.value) continue;
    CHECK(count_hamiltonian(*result.value) == n);
    CHECK(*result.value % 8 == 0);
    CHECK((*result.value / 8) % 2 == 1);  // odd part over odd primes only
  }
}

TEST_CASE("minimality against a linear scan up to 1e6") {
  // first occurrence of every count along 1..1e6, one sieve pass
  std::vector<u64> first_abelian(61, 0), first_hamiltonian(31, 0);
  sieve_counts(1, 1'000'000, [&](u64 n, u64 a, u64 h) {
    if (a <= 60 && first_abelian[a] == 0) first_abelian[a] = n;
    if (h >= 1 && h <= 30 && first_hamiltonian[h] == 0) first_hamiltonian[h] = n;
  });

  for (u64 n = 1; n <= 60; ++n) {
    const auto result = smallest_abelian_index(n);
    if (result.value && *result.value <= 1'000'000) {
      CHECK(first_abelian[n] == *result.value);
    } else {
      CHECK(first_abelian[n] == 0);  // neither absent nor large values occur early
    }
  }
  for (u64 n = 1; n <= 30; ++n) {
    const auto result = smallest_hamiltonian_index(n);
    if (result.value && *result.value <= 1'000'000) {
      CHECK(first_hamiltonian[n] == *result.value);
    } else {
      CHECK(first_hamiltonian[n] == 0);
    }
  }
}

TEST_CASE("nonincreasing assignment onto ascending primes is optimal") {
  static const u64 primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (u64 n = 1; n <= 60; ++n) {
    for (const auto &multiset : partition_factorizations(n)) {
      auto exponents = multiset.exponents;
      REQUIRE(exponents.size() <= 10);
      u64 canonical = 1;
      for (std::size_t i = 0; i < exponents.size(); ++i)
        for (unsigned rep = 0; rep < exponents[i]; ++rep) canonical *= primes[i];

      auto permuted = exponents;
      std::sort(permuted.begin(), permuted.end());
      do {
        u64 order = 1;
        for (std::size_t i = 0; i < permuted.size(); ++i)
          for (unsigned rep = 0; rep < permuted[i]; ++rep) order *= primes[i];
        CHECK(order >= canonical);
      } while (std::next_permutation(permuted.begin(), permuted.end()));
    }
  }
}
