#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace normcount {

// Exact values P(0..m_max) of the integer partition function, built eagerly
// with Euler's pentagonal-number recurrence and immutable afterwards.
// P(0) = P(1) = 1 and P is strictly increasing from m = 2 on.
class PartitionTable {
 public:
  // Throws std::overflow_error if some entry up to m_max exceeds 64 bits.
  explicit PartitionTable(unsigned m_max);

  // The widest table that fits: P(0..416). P(416) = 17873792969689876004
  // is the largest partition number below 2^64.
  static const PartitionTable &uint64_limit();

  unsigned max_index() const { return static_cast<unsigned>(values_.size()) - 1; }

  // P(m). Throws std::out_of_range past the configured capacity.
  std::uint64_t at(unsigned m) const;

  // The unique m >= 2 with P(m) == v, if any; strict monotonicity from
  // m = 2 on makes binary search decide membership. Throws
  // std::invalid_argument for v < 2.
  std::optional<unsigned> inverse(std::uint64_t v) const;

  std::span<const std::uint64_t> values() const { return values_; }

 private:
  explicit PartitionTable(std::vector<std::uint64_t> values);

  std::vector<std::uint64_t> values_;
};

// P(m) from the shared uint64_limit() table.
std::uint64_t partition_number(unsigned m);

// Every partition of m exactly once, each part list nonincreasing, in
// reverse lexicographic order: [m], [m-1,1], ..., [1,...,1]. Guarded to
// m <= 40: this enumeration exists as an oracle, not a production path.
std::vector<std::vector<unsigned>> enumerate_partitions(unsigned m);

// inverse() on the shared table: total over the 64-bit domain because the
// table holds every representable partition number.
std::optional<unsigned> inverse_partition(std::uint64_t v);

namespace detail {
// enumerate_partitions without the oracle guard. The structure enumeration
// uses this with its own cap on the total output size.
std::vector<std::vector<unsigned>> partitions_of(unsigned m);
}  // namespace detail

}  // namespace normcount
