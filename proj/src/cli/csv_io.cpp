#include "hurstlab/cli/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "hurstlab/error.hpp"

namespace hurstlab::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(ErrorKind kind, std::size_t line, const std::string& what) {
    throw Error(kind, "line " + std::to_string(line) + ": " + what);
}

struct Row {
    Date date;
    double close;
    std::size_t line;
};

}  // namespace

PriceSeries read_price_csv(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<Row> rows;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
        line = trim(line);
        if (line.empty()) continue;

        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            fail(ErrorKind::parse_error, line_no, "expected exactly two comma-separated fields");
        }
        const auto first = trim(line.substr(0, comma));
        const auto second = trim(line.substr(comma + 1));

        if (!header_seen) {
            if (first != "date" || second != "close") {
                fail(ErrorKind::parse_error, line_no, "expected header 'date,close'");
            }
            header_seen = true;
            continue;
        }

        const auto date = parse_date(first);
        if (!date) fail(ErrorKind::parse_error, line_no, "invalid ISO-8601 date '" + std::string(first) + "'");
        double close = 0.0;
        auto [ptr, ec] = std::from_chars(second.data(), second.data() + second.size(), close);
        if (ec != std::errc{} || ptr != second.data() + second.size() || !std::isfinite(close)) {
            fail(ErrorKind::parse_error, line_no, "invalid price '" + std::string(second) + "'");
        }
        if (close <= 0.0) {
            fail(ErrorKind::invalid_input, line_no, "price must be positive, got " + std::string(second));
        }
        rows.push_back({*date, close, line_no});
    }
    if (!header_seen) throw Error(ErrorKind::parse_error, "line 1: missing header 'date,close'");

    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].date == rows[i - 1].date) {
            const auto [a, b] = std::minmax(rows[i - 1].line, rows[i].line);
            fail(ErrorKind::invalid_input, b,
                 "duplicate date " + format_date(rows[i].date) + " (also on line " + std::to_string(a) + ")");
        }
    }

    std::vector<Date> dates;
    std::vector<double> closes;
    dates.reserve(rows.size());
    closes.reserve(rows.size());
    for (const auto& r : rows) {
        dates.push_back(r.date);
        closes.push_back(r.close);
    }
    return PriceSeries(std::move(dates), std::move(closes));
}

PriceSeries ingest_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot open " + path.string());
    return read_price_csv(in);
}

void write_price_csv(std::ostream& out, const PriceSeries& series) {
    out << "date,close\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << format_date(series.timestamps()[i]) << ',' << format_exact(series.prices()[i]) << '\n';
    }
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_exact(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace hurstlab::cli
