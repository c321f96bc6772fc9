#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace normcount {

// Configuration problems (missing directory, absent or malformed fixture
// file, wrong extent) -- distinct from value mismatches, which land in the
// report instead.
struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mismatch {
  std::uint64_t index = 0;
  std::uint64_t expected = 0;  // the fixture value
  std::uint64_t got = 0;       // what we recomputed
};

struct TableReport {
  int table_number = 0;
  std::string label;  // "a", "h", "b", "u", "v", "w", "sa", "sh"
  std::size_t values = 0;
  std::optional<Mismatch> first_mismatch;

  bool ok() const { return !first_mismatch.has_value(); }
};

struct VerifyReport {
  std::vector<TableReport> tables;
  std::size_t total_values = 0;

  std::size_t tables_ok() const;
  bool all_ok() const { return tables_ok() == tables.size(); }
};

// Recomputes every value of the eight bundled reference tables
// (a 1..200, h 1..200, b 1..300, u 1..100, v 1..200, w 1..200,
// S_a 1..60, S_h 1..30) and compares exactly against the fixture files
// in fixtures_dir. Throws FixtureError for configuration problems.
VerifyReport verify_against_fixtures(const std::filesystem::path &fixtures_dir);

// One line per table, then "K/8 tables verified (N values)".
void print_report(std::ostream &os, const VerifyReport &report);

}  // namespace normcount
