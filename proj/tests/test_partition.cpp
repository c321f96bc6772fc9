#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>

#include "normcount/partition.hpp"

using namespace normcount;
using u64 = std::uint64_t;

TEST_CASE("enumeration oracle agrees with the recurrence up to 40") {
  for (unsigned m = 0; m <= 40; ++m) {
    const auto parts = enumerate_partitions(m);
    CHECK(parts.size() == partition_number(m));

    // each partition is a nonincreasing decomposition of m, no duplicates
    std::set<std::vector<unsigned>> seen;
    for (const auto &p : parts) {
      CHECK(std::is_sorted(p.rbegin(), p.rend()));
      unsigned sum = 0;
      for (unsigned part : p) {
        CHECK(part >= 1);
        sum += part;
      }
      CHECK(sum == m);
      seen.insert(p);
    }
    CHECK(seen.size() == parts.size());
  }
}

TEST_CASE("enumerate_partitions examples") {
  CHECK(enumerate_partitions(3) ==
        std::vector<std::vector<unsigned>>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(enumerate_partitions(0) == std::vector<std::vector<unsigned>>{{}});
  CHECK(enumerate_partitions(5).size() == 7);
  CHECK_THROWS_AS(enumerate_partitions(41), std::invalid_argument);
}

TEST_CASE("partition_number values") {
  CHECK(partition_number(0) == 1);
  CHECK(partition_number(1) == 1);
  CHECK(partition_number(4) == 5);
  CHECK(partition_number(10) == 42);  // enumeration oracle above pins this
  CHECK(partition_number(64) == 1'741'630);
}

TEST_CASE("monotonicity from m = 1 on") {
  const auto &table = PartitionTable::uint64_limit();
  for (unsigned m = 1; m < table.max_index(); ++m)
    CHECK(table.at(m + 1) > table.at(m));
}

TEST_CASE("uint64_limit table ends at the 64-bit boundary") {
  const auto &table = PartitionTable::uint64_limit();
  CHECK(table.max_index() == 416);
  CHECK(table.at(416) == 17'873'792'969'689'876'004ULL);
  CHECK_THROWS_AS(table.at(417), std::out_of_range);
}

TEST_CASE("explicit capacity") {
  const PartitionTable small(64);
  CHECK(small.max_index() == 64);
  CHECK(small.at(64) == 1'741'630);
  CHECK_THROWS_AS(small.at(65), std::out_of_range);
  CHECK_THROWS_AS(PartitionTable(417), std::overflow_error);
}

TEST_CASE("inverse_partition") {
  CHECK(inverse_partition(5) == 4);
  CHECK(inverse_partition(2) == 2);
  CHECK_FALSE(inverse_partition(13).has_value());  // 13 is not a partition number
  CHECK_THROWS_AS(inverse_partition(1), std::invalid_argument);

  const auto &table = PartitionTable::uint64_limit();
  for (unsigned m = 2; m <= table.max_index(); ++m)
    CHECK(inverse_partition(table.at(m)) == m);

  // values wedged between partition numbers are rejected
  for (unsigned m = 3; m <= 30; ++m)
    CHECK_FALSE(inverse_partition(table.at(m) + 1).has_value());
}
