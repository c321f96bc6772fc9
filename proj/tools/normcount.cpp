// normcount: point, range, inverse and structure queries over the counting
// sequences of groups whose subgroups are all normal, plus verification of
// the bundled reference tables.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "normcount/golden.hpp"
#include "normcount/groupcount.hpp"
#include "normcount/inverse.hpp"
#include "normcount/render.hpp"
#include "normcount/sieve.hpp"

#ifndef NORMCOUNT_DEFAULT_FIXTURES
#define NORMCOUNT_DEFAULT_FIXTURES "data/fixtures"
#endif

namespace {

using normcount::SequenceKind;
using u64 = std::uint64_t;

u64 evaluate_point(SequenceKind kind, u64 n) {
  switch (kind) {
    case SequenceKind::A: return normcount::count_abelian(n);
    case SequenceKind::H: return normcount::count_hamiltonian(n);
    case SequenceKind::B: return normcount::count_normal(n);
    default: return normcount::cumulative(kind, n);
  }
}

int run_structures(const std::string &kind, u64 n, u64 cap) {
  std::vector<normcount::GroupStructure> structures;
  if (kind == "abelian" || kind == "all") {
    for (auto &s : normcount::abelian_structures(n, cap)) structures.push_back(std::move(s));
  }
  if (kind == "hamiltonian" || kind == "all") {
    for (auto &s : normcount::hamiltonian_structures(n, cap)) structures.push_back(std::move(s));
  }
  for (const auto &s : structures) std::cout << normcount::to_string(s) << '\n';
  std::cout << "count: " << structures.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"counting sequences for groups all of whose subgroups are normal"};
  app.require_subcommand(1);

  std::string seq, inverse_kind, structure_kind, format_name = "bfile";
  std::string fixtures_dir = NORMCOUNT_DEFAULT_FIXTURES;
  u64 n = 0, lo = 0, hi = 0;
  normcount::SieveConfig sieve_config;
  u64 structure_cap = normcount::kDefaultStructureCap;

  auto *point = app.add_subcommand("point", "Evaluate one term of a sequence");
  point->add_option("seq", seq, "sequence: a, h, b, u, v or w")->required();
  point->add_option("n", n, "term index (positive)")->required()->check(CLI::PositiveNumber);

  auto *range = app.add_subcommand("range", "Emit terms lo..hi via the segmented sieve");
  range->add_option("seq", seq, "sequence: a, h, b, u, v or w")->required();
  range->add_option("lo", lo, "first index")->required()->check(CLI::PositiveNumber);
  range->add_option("hi", hi, "last index")->required()->check(CLI::PositiveNumber);
  range->add_option("--format", format_name, "output format: bfile, csv or table")
      ->capture_default_str()
      ->check(CLI::IsMember({"bfile", "csv", "table"}));
  range->add_option("--segment-size", sieve_config.segment_size,
                    "sieve window width in terms")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto *inverse = app.add_subcommand("inverse",
                                     "Smallest order with exactly n groups (0 when none exists)");
  inverse->add_option("kind", inverse_kind, "sa (abelian) or sh (hamiltonian)")
      ->required()
      ->check(CLI::IsMember({"sa", "sh"}));
  inverse->add_option("n", n, "target count")->required()->check(CLI::PositiveNumber);

  auto *structures = app.add_subcommand("structures", "List isomorphism classes of order n");
  structures->add_option("kind", structure_kind, "abelian, hamiltonian or all")
      ->required()
      ->check(CLI::IsMember({"abelian", "hamiltonian", "all"}));
  structures->add_option("n", n, "group order")->required()->check(CLI::PositiveNumber);
  structures->add_option("--cap", structure_cap, "largest structure count to enumerate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto *verify = app.add_subcommand("verify", "Recompute the bundled reference tables");
  verify->add_option("--fixtures", fixtures_dir, "directory of fixture files")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are exit 2
  }

  try {
    if (point->parsed()) {
      const auto kind = normcount::sequence_from_string(seq);
      if (!kind) throw std::invalid_argument("unknown sequence \"" + seq + "\"");
      std::cout << evaluate_point(*kind, n) << '\n';
      return 0;
    }
    if (range->parsed()) {
      const auto kind = normcount::sequence_from_string(seq);
      if (!kind) throw std::invalid_argument("unknown sequence \"" + seq + "\"");
      const auto format = normcount::format_from_string(format_name);
      if (lo > hi) throw std::invalid_argument("range: lo must not exceed hi");
      normcount::render_range(std::cout, *kind, lo, hi, *format, sieve_config);
      return 0;
    }
    if (inverse->parsed()) {
      const auto result = inverse_kind == "sa" ? normcount::smallest_abelian_index(n)
                                               : normcount::smallest_hamiltonian_index(n);
      std::cout << result.value.value_or(0) << '\n';  // 0 marks "does not exist"
      return 0;
    }
    if (structures->parsed()) {
      return run_structures(structure_kind, n, structure_cap);
    }
    if (verify->parsed()) {
      const auto report = normcount::verify_against_fixtures(fixtures_dir);
      normcount::print_report(std::cout, report);
      return report.all_ok() ? 0 : 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "normcount: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
