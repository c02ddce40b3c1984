#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hurstlab/core.hpp"

namespace hurstlab::cli {

/// Reads a `date,close` price file. Rows may come in any order; they are
/// sorted by date. Errors name the 1-based line (the header is line 1).
PriceSeries read_price_csv(std::istream& in);
PriceSeries ingest_csv(const std::filesystem::path& path);

/// Writes `date,close` with shortest round-trip price formatting, so
/// read_price_csv(write_price_csv(s)) == s.
void write_price_csv(std::ostream& out, const PriceSeries& series);

/// 12 significant digits, the format of every result table.
std::string format_number(double value);
/// Shortest representation that parses back to the same double.
std::string format_exact(double value);

}  // namespace hurstlab::cli
