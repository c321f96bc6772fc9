#include "normcount/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace normcount {
namespace {

using u64 = std::uint64_t;
using i128 = __int128;

// Euler's pentagonal-number recurrence:
//   P(m) = sum_k (-1)^(k+1) [ P(m - k(3k-1)/2) + P(m - k(3k+1)/2) ].
// The alternating sum is taken in a 128-bit accumulator; each final value
// must fit 64 bits. Appends entries until m_max (inclusive) or until the
// next entry would overflow, whichever comes first; returns false in the
// overflow case.
bool extend_table(std::vector<u64> &values, u64 m_max) {
  while (values.size() <= m_max) {
    const auto m = static_cast<long long>(values.size());
    i128 sum = 0;
    for (long long k = 1;; ++k) {
      const long long g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const long long g2 = k * (3 * k + 1) / 2;
      const int sign = (k & 1) ? 1 : -1;
      sum += sign * i128{values[m - g1]};
      if (g2 <= m) sum += sign * i128{values[m - g2]};
    }
    if (sum > i128{std::numeric_limits<u64>::max()}) return false;
    values.push_back(static_cast<u64>(sum));
  }
  return true;
}

}  // namespace

PartitionTable::PartitionTable(unsigned m_max) {
  values_.reserve(std::size_t{m_max} + 1);
  values_.push_back(1);  // P(0): the empty partition
  if (!extend_table(values_, m_max)) {
    throw std::overflow_error("PartitionTable: P(" + std::to_string(values_.size()) +
                              ") does not fit in 64 bits");
  }
}

PartitionTable::PartitionTable(std::vector<u64> values) : values_(std::move(values)) {}

const PartitionTable &PartitionTable::uint64_limit() {
  static const PartitionTable table = [] {
    std::vector<u64> values{1};
    extend_table(values, std::numeric_limits<u64>::max());  // stops at the 64-bit boundary
    return PartitionTable(std::move(values));
  }();
  return table;
}

u64 PartitionTable::at(unsigned m) const {
  if (m >= values_.size()) {
    throw std::out_of_range("PartitionTable: P(" + std::to_string(m) +
                            ") is beyond the table capacity (m_max = " +
                            std::to_string(max_index()) + ")");
  }
  return values_[m];
}

std::optional<unsigned> PartitionTable::inverse(u64 v) const {
  if (v < 2) throw std::invalid_argument("PartitionTable::inverse: v must be >= 2");
  if (values_.size() <= 2) return std::nullopt;  // only P(0) = P(1) = 1 present
  const auto first = values_.begin() + 2;  // strictly increasing from here on
  const auto it = std::lower_bound(first, values_.end(), v);
  if (it == values_.end() || *it != v) return std::nullopt;
  return static_cast<unsigned>(it - values_.begin());
}

u64 partition_number(unsigned m) { return PartitionTable::uint64_limit().at(m); }

std::optional<unsigned> inverse_partition(u64 v) {
  return PartitionTable::uint64_limit().inverse(v);
}

namespace detail {

std::vector<std::vector<unsigned>> partitions_of(unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  const auto descend = [&](auto &&self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  descend(descend, m, m);
  return out;
}

}  // namespace detail

std::vector<std::vector<unsigned>> enumerate_partitions(unsigned m) {
  if (m > 40) {
    throw std::invalid_argument("enumerate_partitions: oracle-scale only (m <= 40), got m = " +
                                std::to_string(m));
  }
  return detail::partitions_of(m);
}

}  // namespace normcount
