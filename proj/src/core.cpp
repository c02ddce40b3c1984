#include "hurstlab/core.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "hurstlab/error.hpp"

namespace hurstlab {

namespace {

bool parse_digits(std::string_view text, int& out) {
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
    }
    int y = 0, m = 0, d = 0;
    if (!parse_digits(text.substr(0, 4), y) || !parse_digits(text.substr(5, 2), m) ||
        !parse_digits(text.substr(8, 2), d)) {
        return std::nullopt;
    }
    Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
              std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

std::string format_date(Date date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

PriceSeries::PriceSeries(std::vector<Date> timestamps, std::vector<double> prices)
    : timestamps_(std::move(timestamps)), prices_(std::move(prices)) {
    if (timestamps_.size() != prices_.size()) {
        throw Error(ErrorKind::invalid_input, "timestamps and prices differ in length");
    }
    if (prices_.size() < 2) {
        throw Error(ErrorKind::insufficient_data, "a price series needs at least 2 observations");
    }
    for (std::size_t i = 0; i < prices_.size(); ++i) {
        if (!std::isfinite(prices_[i]) || prices_[i] <= 0.0) {
            throw Error(ErrorKind::invalid_input,
                        "price at index " + std::to_string(i) + " is not a positive finite number");
        }
        if (i > 0 && !(timestamps_[i - 1] < timestamps_[i])) {
            throw Error(ErrorKind::invalid_input,
                        "timestamps not strictly increasing at index " + std::to_string(i));
        }
    }
}

ReturnSeries::ReturnSeries(std::vector<Date> timestamps, std::vector<double> values)
    : timestamps_(std::move(timestamps)), values_(std::move(values)) {
    if (!timestamps_.empty() && timestamps_.size() != values_.size()) {
        throw Error(ErrorKind::invalid_input, "timestamps and returns differ in length");
    }
}

LogPriceSeries::LogPriceSeries(std::vector<double> values, std::vector<Date> timestamps)
    : values_(std::move(values)), timestamps_(std::move(timestamps)) {
    if (!timestamps_.empty() && timestamps_.size() != values_.size()) {
        throw Error(ErrorKind::invalid_input, "timestamps and values differ in length");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorKind::invalid_input,
                        "series value at index " + std::to_string(i) + " is not finite");
        }
    }
}

std::span<const double> LogPriceSeries::window(std::size_t start, std::size_t length) const {
    if (start > values_.size() || length > values_.size() - start) {
        throw Error(ErrorKind::invalid_parameter, "window exceeds series bounds");
    }
    return std::span<const double>(values_).subspan(start, length);
}

ReturnSeries log_returns(const PriceSeries& prices) {
    const auto& p = prices.prices();
    std::vector<double> r(p.size() - 1);
    std::vector<Date> dates(prices.timestamps().begin() + 1, prices.timestamps().end());
    for (std::size_t t = 0; t + 1 < p.size(); ++t) {
        r[t] = std::log(p[t + 1]) - std::log(p[t]);
    }
    return ReturnSeries(std::move(dates), std::move(r));
}

LogPriceSeries log_prices(const PriceSeries& prices) {
    std::vector<double> x(prices.size());
    for (std::size_t t = 0; t < x.size(); ++t) x[t] = std::log(prices.prices()[t]);
    return LogPriceSeries(std::move(x), prices.timestamps());
}

LogPriceSeries raw_prices(const PriceSeries& prices) {
    return LogPriceSeries(prices.prices(), prices.timestamps());
}

WeightVector exp_weights(std::size_t window, double theta) {
    if (window < 1) throw Error(ErrorKind::invalid_parameter, "weight window must be >= 1");
    if (!(theta > 0.0)) throw Error(ErrorKind::invalid_parameter, "theta must be > 0");

    std::vector<double> w(window);
    if (std::isinf(theta)) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(window));
        return WeightVector(std::move(w), theta);
    }
    const double decay = 1.0 / theta;
    // w0 = (1 - e^-a) / (1 - e^-a*dt), in expm1 form so huge theta keeps precision.
    const double w0 = std::expm1(-decay) / std::expm1(-decay * static_cast<double>(window));
    for (std::size_t s = 0; s < window; ++s) {
        w[s] = w0 * std::exp(-static_cast<double>(s) * decay);
    }
    return WeightVector(std::move(w), theta);
}

WeightVector WeightVector::truncated(std::size_t length) const {
    if (length < 1 || length > weights_.size()) {
        throw Error(ErrorKind::invalid_parameter, "truncation length out of range");
    }
    if (length == weights_.size()) return *this;
    std::vector<double> w(weights_.begin(), weights_.begin() + static_cast<std::ptrdiff_t>(length));
    double total = 0.0;
    for (double v : w) total += v;
    for (double& v : w) v /= total;
    return WeightVector(std::move(w), theta_);
}

double weighted_mean(std::span<const double> values_recent_first, const WeightVector& weights) {
    const std::size_t m = values_recent_first.size();
    if (m == 0) throw Error(ErrorKind::insufficient_data, "weighted mean of an empty sequence");
    if (m > weights.window()) {
        throw Error(ErrorKind::invalid_parameter, "more values than weights");
    }
    const WeightVector w = weights.truncated(m);
    double acc = 0.0;
    for (std::size_t s = 0; s < m; ++s) acc += w[s] * values_recent_first[s];
    return acc;
}

}  // namespace hurstlab
