#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcount/factorint.hpp"

namespace normcount {

// The six sequences: point counts a(n), h(n), b(n) of abelian, hamiltonian
// and all-subgroups-normal groups of order n, and their cumulative sums
// u(n), v(n), w(n) over orders <= n.
enum class SequenceKind { A, H, B, U, V, W };

constexpr bool is_cumulative(SequenceKind k) {
  return k == SequenceKind::U || k == SequenceKind::V || k == SequenceKind::W;
}

const char *to_string(SequenceKind k);
std::optional<SequenceKind> sequence_from_string(std::string_view s);

// Number of abelian groups of order n: the product of P(alpha) over the
// prime exponents of n. count_abelian(1) == 1 (empty product).
// Throws std::invalid_argument for n == 0.
std::uint64_t count_abelian(std::uint64_t n);

// 0 unless 8 | n; count_abelian of the odd part otherwise.
std::uint64_t count_hamiltonian(std::uint64_t n);

// Groups of order n all of whose subgroups are normal: abelian + hamiltonian.
std::uint64_t count_normal(std::uint64_t n);

inline constexpr std::uint64_t kDefaultStructureCap = 1'000'000;

// Direct-product decomposition of one isomorphism class: an optional
// quaternion factor Q8 followed by cyclic factors p^m in canonical order
// (prime ascending, exponent descending). With the quaternion factor the
// 2-part beyond Q8 is elementary abelian, so every p = 2 factor has
// exponent 1 and all other factors have odd p.
struct GroupStructure {
  bool has_quaternion = false;
  std::vector<PrimePower> cyclic_factors;

  std::uint64_t order() const;

  friend auto operator<=>(const GroupStructure &, const GroupStructure &) = default;
};

// "Z8", "Z4 x Z2", "Q8 x Z3"; the trivial group renders as "Z1".
std::string to_string(const GroupStructure &s);

// One structure per isomorphism class of abelian groups of order n, built
// as the Cartesian product over primes of the partitions of each exponent;
// list length equals count_abelian(n). Throws std::length_error when the
// count exceeds cap.
std::vector<GroupStructure> abelian_structures(std::uint64_t n,
                                               std::uint64_t cap = kDefaultStructureCap);

// Empty when e(n) < 3; otherwise Q8 x Z2^(e(n)-3) x A for each abelian
// structure A of the odd part; list length equals count_hamiltonian(n).
std::vector<GroupStructure> hamiltonian_structures(std::uint64_t n,
                                                   std::uint64_t cap = kDefaultStructureCap);

}  // namespace normcount
