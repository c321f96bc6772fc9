#include "normcount/groupcount.hpp"

#include <stdexcept>
#include <string>

#include "normcount/partition.hpp"

namespace normcount {
namespace {

using u64 = std::uint64_t;

u64 pow_u64(u64 base, unsigned exp) {
  u64 result = 1;
  while (exp-- > 0) result *= base;
  return result;
}

}  // namespace

const char *to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::A: return "a";
    case SequenceKind::H: return "h";
    case SequenceKind::B: return "b";
    case SequenceKind::U: return "u";
    case SequenceKind::V: return "v";
    case SequenceKind::W: return "w";
  }
  return "?";
}

std::optional<SequenceKind> sequence_from_string(std::string_view s) {
  if (s == "a") return SequenceKind::A;
  if (s == "h") return SequenceKind::H;
  if (s == "b") return SequenceKind::B;
  if (s == "u") return SequenceKind::U;
  if (s == "v") return SequenceKind::V;
  if (s == "w") return SequenceKind::W;
  return std::nullopt;
}

u64 count_abelian(u64 n) {
  if (n == 0) throw std::invalid_argument("count_abelian: order must be positive");
  const auto &table = PartitionTable::uint64_limit();
  u64 count = 1;
  // P(i)P(j) <= P(i+j) and the exponents sum to at most 63, so the product
  // is bounded by P(63) = 1505499 and cannot overflow.
  for (const auto &[prime, exponent] : factorize(n).factors) count *= table.at(exponent);
  return count;
}

u64 count_hamiltonian(u64 n) {
  if (n == 0) throw std::invalid_argument("count_hamiltonian: order must be positive");
  const auto split = split_two_adic(n);
  return split.e < 3 ? 0 : count_abelian(split.odd);
}

u64 count_normal(u64 n) { return count_abelian(n) + count_hamiltonian(n); }

u64 GroupStructure::order() const {
  u64 order = has_quaternion ? 8 : 1;
  for (const auto &[prime, exponent] : cyclic_factors) order *= pow_u64(prime, exponent);
  return order;
}

std::string to_string(const GroupStructure &s) {
  std::string out;
  if (s.has_quaternion) out = "Q8";
  for (const auto &[prime, exponent] : s.cyclic_factors) {
    if (!out.empty()) out += " x ";
    out += "Z";
    out += std::to_string(pow_u64(prime, exponent));
  }
  if (out.empty()) out = "Z1";
  return out;
}

std::vector<GroupStructure> abelian_structures(u64 n, u64 cap) {
  const u64 count = count_abelian(n);
  if (count > cap) {
    throw std::length_error("abelian_structures: " + std::to_string(count) +
                            " structures for n = " + std::to_string(n) +
                            " exceed the cap of " + std::to_string(cap));
  }

  const PrimeFactorization f = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> choices;
  choices.reserve(f.factors.size());
  for (const auto &[prime, exponent] : f.factors)
    choices.push_back(detail::partitions_of(exponent));

  // Odometer over the per-prime partition choices, last prime fastest.
  // Partitions come out nonincreasing, so each structure is born canonical.
  std::vector<GroupStructure> out;
  out.reserve(count);
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    GroupStructure s;
    for (std::size_t i = 0; i < choices.size(); ++i)
      for (unsigned part : choices[i][pick[i]])
        s.cyclic_factors.push_back({f.factors[i].prime, part});
    out.push_back(std::move(s));

    std::size_t pos = choices.size();
    while (pos > 0) {
      if (++pick[pos - 1] < choices[pos - 1].size()) break;
      pick[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

std::vector<GroupStructure> hamiltonian_structures(u64 n, u64 cap) {
  if (n == 0) throw std::invalid_argument("hamiltonian_structures: order must be positive");
  const auto split = split_two_adic(n);
  if (split.e < 3) return {};

  const unsigned elementary_rank = split.e - 3;  // 2-part beyond Q8: Z2^k
  std::vector<GroupStructure> out;
  for (auto &odd_part : abelian_structures(split.odd, cap)) {
    GroupStructure s;
    s.has_quaternion = true;
    s.cyclic_factors.assign(elementary_rank, PrimePower{2, 1});
    s.cyclic_factors.insert(s.cyclic_factors.end(), odd_part.cyclic_factors.begin(),
                            odd_part.cyclic_factors.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace normcount
