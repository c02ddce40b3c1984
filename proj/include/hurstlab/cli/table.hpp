#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace hurstlab::cli {

enum class Format { csv, json };

/// monostate is an empty cell (CSV "", JSON null).
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// JSON output is an array of records keyed by column name.
void write_table(std::ostream& out, const Table& table, Format format);

}  // namespace hurstlab::cli
