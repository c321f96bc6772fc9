#include "normcount/render.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace normcount {

std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "bfile") return OutputFormat::bfile;
  if (s == "csv") return OutputFormat::csv;
  if (s == "table") return OutputFormat::table;
  return std::nullopt;
}

void render_range(std::ostream &os, SequenceKind kind, std::uint64_t lo,
                  std::uint64_t hi, OutputFormat format, const SieveConfig &config) {
  const bool running_sum = is_cumulative(kind);
  const unsigned columns = running_sum ? 10 : 20;
  unsigned in_row = 0;
  std::uint64_t sum = 0;

  if (format == OutputFormat::csv) os << "n,value\n";

  sieve_counts(running_sum ? 1 : lo, hi, [&](std::uint64_t n, std::uint64_t a, std::uint64_t h) {
    const std::uint64_t point = (kind == SequenceKind::A || kind == SequenceKind::U) ? a
                              : (kind == SequenceKind::H || kind == SequenceKind::V) ? h
                                                                                     : a + h;
    std::uint64_t value = point;
    if (running_sum) {
      if (__builtin_add_overflow(sum, point, &sum))
        throw std::overflow_error("cumulative sum exceeds 64 bits at n = " + std::to_string(n));
      value = sum;
    }
    if (n < lo) return;

    switch (format) {
      case OutputFormat::bfile:
        os << n << ' ' << value << '\n';
        break;
      case OutputFormat::csv:
        os << n << ',' << value << '\n';
        break;
      case OutputFormat::table:
        // Rows of `columns` terms; the label is the index just before the
        // row, so a range starting at 1 gets labels 0, 20, 40, ...
        if (in_row == 0) os << std::setw(6) << (n - 1);
        os << ' ' << std::setw(5) << value;
        if (++in_row == columns) {
          os << '\n';
          in_row = 0;
        }
        break;
    }
  }, config);

  if (format == OutputFormat::table && in_row != 0) os << '\n';
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_bfile(std::istream &in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line.find('-') != std::string::npos)
      throw std::runtime_error("b-file line " + std::to_string(lineno) +
                               ": negative values are not valid");
    std::istringstream fields(line);
    std::uint64_t index = 0, value = 0;
    if (!(fields >> index >> value))
      throw std::runtime_error("b-file line " + std::to_string(lineno) +
                               ": expected \"<index> <value>\"");
    std::string trailing;
    if (fields >> trailing)
      throw std::runtime_error("b-file line " + std::to_string(lineno) +
                               ": trailing content \"" + trailing + "\"");
    out.emplace_back(index, value);
  }
  return out;
}

}  // namespace normcount
