#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "normcount/sieve.hpp"

namespace normcount {

enum class OutputFormat { bfile, csv, table };

std::optional<OutputFormat> format_from_string(std::string_view s);

// Streams hi-lo+1 terms of a sequence:
//   bfile  "<n> <value>\n" per term (OEIS b-file convention)
//   csv    "n,value" header, then "<n>,<value>" rows
//   table  rows of 20 values (10 for cumulative kinds) with a leading
//          row-offset label, mirroring the reference table layout
// All numbers are plain unsigned decimal; output is deterministic.
void render_range(std::ostream &os, SequenceKind kind, std::uint64_t lo,
                  std::uint64_t hi, OutputFormat format,
                  const SieveConfig &config = {});

// Parses "<index> <value>" lines; '#' lines and blank lines are skipped.
// Reads both emitted b-files and the golden fixture files. Throws
// std::runtime_error on malformed lines.
std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_bfile(std::istream &in);

}  // namespace normcount
