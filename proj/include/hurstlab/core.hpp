#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hurstlab {

using Date = std::chrono::year_month_day;

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD).
std::optional<Date> parse_date(std::string_view text);
std::string format_date(Date date);

/// Daily closing prices. Construction validates: at least two points,
/// finite strictly positive prices, strictly increasing dates.
class PriceSeries {
public:
    PriceSeries(std::vector<Date> timestamps, std::vector<double> prices);

    std::size_t size() const noexcept { return prices_.size(); }
    const std::vector<Date>& timestamps() const noexcept { return timestamps_; }
    const std::vector<double>& prices() const noexcept { return prices_; }

    bool operator==(const PriceSeries&) const = default;

private:
    std::vector<Date> timestamps_;
    std::vector<double> prices_;
};

/// Log-returns r(t) = ln P(t+1) - ln P(t). Each return carries the date of
/// the later price of its pair.
class ReturnSeries {
public:
    ReturnSeries(std::vector<Date> timestamps, std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<Date>& timestamps() const noexcept { return timestamps_; }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::vector<Date> timestamps_;
    std::vector<double> values_;
};

/// The series whose structure functions are analysed, usually ln P(t).
/// Dates are optional metadata; synthetic series carry none.
class LogPriceSeries {
public:
    explicit LogPriceSeries(std::vector<double> values, std::vector<Date> timestamps = {});

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<Date>& timestamps() const noexcept { return timestamps_; }
    bool has_dates() const noexcept { return !timestamps_.empty(); }

    std::span<const double> window(std::size_t start, std::size_t length) const;

private:
    std::vector<double> values_;
    std::vector<Date> timestamps_;
};

ReturnSeries log_returns(const PriceSeries& prices);
LogPriceSeries log_prices(const PriceSeries& prices);
/// The raw price levels as an analysable series (no logarithm taken).
LogPriceSeries raw_prices(const PriceSeries& prices);

/// Normalised exponential weights w_s = w0 exp(-s/theta), s = 0 is the most
/// recent observation.
class WeightVector {
public:
    std::size_t window() const noexcept { return weights_.size(); }
    double theta() const noexcept { return theta_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double operator[](std::size_t s) const { return weights_[s]; }

    /// First `length` weights, renormalised to sum to one. Used when a lagged
    /// quantity leaves fewer than window() usable observations.
    WeightVector truncated(std::size_t length) const;

private:
    friend WeightVector exp_weights(std::size_t window, double theta);
    WeightVector(std::vector<double> weights, double theta)
        : weights_(std::move(weights)), theta_(theta) {}

    std::vector<double> weights_;
    double theta_;
};

/// theta may be +infinity, which yields uniform weights.
WeightVector exp_weights(std::size_t window, double theta);

/// Weighted average of `values_recent_first` (values[0] is the most recent
/// observation). When fewer values than weights are given, the leading
/// weights are renormalised.
double weighted_mean(std::span<const double> values_recent_first, const WeightVector& weights);

}  // namespace hurstlab
