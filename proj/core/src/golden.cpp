#include "normcount/golden.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "normcount/inverse.hpp"
#include "normcount/render.hpp"
#include "normcount/sieve.hpp"

namespace normcount {
namespace {

using u64 = std::uint64_t;

struct FixtureDef {
  int table_number;
  const char *filename;
  const char *label;
  std::size_t count;
  std::function<std::vector<u64>()> recompute;
};

std::vector<u64> pointwise(u64 (*f)(u64), std::size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  for (u64 n = 1; n <= count; ++n) out.push_back(f(n));
  return out;
}

std::vector<u64> inverse_values(InverseResult (*f)(u64), std::size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  for (u64 n = 1; n <= count; ++n) out.push_back(f(n).value.value_or(0));
  return out;
}

const std::vector<FixtureDef> &fixture_defs() {
  static const std::vector<FixtureDef> defs = {
      {1, "table1_a.txt", "a", 200, [] { return pointwise(count_abelian, 200); }},
      {2, "table2_h.txt", "h", 200, [] { return pointwise(count_hamiltonian, 200); }},
      {3, "table3_b.txt", "b", 300, [] { return pointwise(count_normal, 300); }},
      {4, "table4_u.txt", "u", 100, [] { return sieve_range(SequenceKind::U, 1, 100); }},
      {5, "table5_v.txt", "v", 200, [] { return sieve_range(SequenceKind::V, 1, 200); }},
      {6, "table6_w.txt", "w", 200, [] { return sieve_range(SequenceKind::W, 1, 200); }},
      {7, "table7_sa.txt", "sa", 60, [] { return inverse_values(smallest_abelian_index, 60); }},
      {8, "table8_sh.txt", "sh", 30, [] { return inverse_values(smallest_hamiltonian_index, 30); }},
  };
  return defs;
}

std::vector<u64> load_fixture(const std::filesystem::path &path, const FixtureDef &def) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file: " + path.string());
  std::vector<std::pair<u64, u64>> entries;
  try {
    entries = parse_bfile(in);
  } catch (const std::runtime_error &e) {
    throw FixtureError(path.string() + ": " + e.what());
  }
  if (entries.size() != def.count)
    throw FixtureError(path.string() + ": expected " + std::to_string(def.count) +
                       " values, found " + std::to_string(entries.size()));
  std::vector<u64> values;
  values.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != i + 1)
      throw FixtureError(path.string() + ": indices must run 1.." + std::to_string(def.count));
    values.push_back(entries[i].second);
  }
  return values;
}

}  // namespace

std::size_t VerifyReport::tables_ok() const {
  std::size_t ok = 0;
  for (const auto &t : tables) ok += t.ok() ? 1 : 0;
  return ok;
}

VerifyReport verify_against_fixtures(const std::filesystem::path &fixtures_dir) {
  if (!std::filesystem::is_directory(fixtures_dir))
    throw FixtureError("fixtures directory not found: " + fixtures_dir.string());

  VerifyReport report;
  for (const auto &def : fixture_defs()) {
    const std::vector<u64> expected = load_fixture(fixtures_dir / def.filename, def);
    const std::vector<u64> got = def.recompute();

    TableReport table{def.table_number, def.label, expected.size(), std::nullopt};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (got[i] != expected[i]) {
        table.first_mismatch = Mismatch{i + 1, expected[i], got[i]};
        break;
      }
    }
    report.total_values += expected.size();
    report.tables.push_back(std::move(table));
  }
  return report;
}

void print_report(std::ostream &os, const VerifyReport &report) {
  for (const auto &t : report.tables) {
    os << "table " << t.table_number << " (" << t.label << "): ";
    if (t.ok()) {
      os << "ok (" << t.values << " values)\n";
    } else {
      os << "MISMATCH at n = " << t.first_mismatch->index << ": expected "
         << t.first_mismatch->expected << ", got " << t.first_mismatch->got << '\n';
    }
  }
  os << report.tables_ok() << "/" << report.tables.size() << " tables verified ("
     << report.total_values << " values)\n";
}

}  // namespace normcount
