#include "hurstlab/cli/table.hpp"

#include <cstdlib>
#include <ostream>

#include <json.hpp>

#include "hurstlab/cli/csv_io.hpp"
#include "hurstlab/error.hpp"

namespace hurstlab::cli {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw Error(ErrorKind::numeric_failure, "table row width does not match header");
    }
    rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return {};
            } else if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else {
                if (v.find_first_of(",\"\n") == std::string::npos) return v;
                std::string quoted = "\"";
                for (char c : v) {
                    if (c == '"') quoted += '"';
                    quoted += c;
                }
                return quoted + '"';
            }
        },
        cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                // Round through the 12-digit text so CSV and JSON carry the same value.
                return std::strtod(format_number(v).c_str(), nullptr);
            } else {
                return v;
            }
        },
        cell);
}

}  // namespace

void write_table(std::ostream& out, const Table& table, Format format) {
    if (format == Format::csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << table.columns[c];
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json ordered = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) rec[table.columns[c]] = json_value(row[c]);
        ordered.push_back(std::move(rec));
    }
    out << ordered.dump(2) << '\n';
}

}  // namespace hurstlab::cli
