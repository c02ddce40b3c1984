#include "hurstlab/rolling.hpp"

#include <cmath>
#include <string>

#include "hurstlab/error.hpp"

namespace hurstlab {

void RollingConfig::validate() const {
    if (tau_max_range.lo < 3 || tau_max_range.hi < tau_max_range.lo) {
        throw Error(ErrorKind::invalid_parameter, "tau_max range must satisfy 3 <= lo <= hi");
    }
    if (window <= tau_max_range.hi + 1) {
        throw Error(ErrorKind::invalid_parameter,
                    "window must exceed tau_max_hi + 1 (" + std::to_string(tau_max_range.hi + 1) + ")");
    }
    if (shift < 1 || shift > window) {
        throw Error(ErrorKind::invalid_parameter, "shift must lie in [1, window]");
    }
    if (weighted && !(theta > 0.0)) throw Error(ErrorKind::invalid_parameter, "theta must be > 0");
    if (q_list.empty()) throw Error(ErrorKind::invalid_parameter, "q list is empty");
    for (double q : q_list) {
        if (!(q > 0.0) || !std::isfinite(q)) {
            throw Error(ErrorKind::invalid_parameter, "moment orders must be positive");
        }
    }
}

std::size_t window_count(std::size_t n, std::size_t window, std::size_t shift) noexcept {
    if (n < window || shift == 0) return 0;
    return (n - window) / shift + 1;
}

std::vector<std::size_t> window_starts(std::size_t n, std::size_t window, std::size_t shift,
                                       Anchor anchor) {
    const std::size_t count = window_count(n, window, shift);
    if (count == 0) {
        throw Error(ErrorKind::insufficient_data,
                    "series of " + std::to_string(n) + " points is shorter than one window of " +
                        std::to_string(window));
    }
    const std::size_t offset = anchor == Anchor::end ? (n - window) % shift : 0;
    std::vector<std::size_t> starts(count);
    for (std::size_t k = 0; k < count; ++k) starts[k] = offset + k * shift;
    return starts;
}

std::vector<double> GheTrajectory::h_values(std::size_t q_index) const {
    std::vector<double> out;
    out.reserve(windows.size());
    for (const auto& w : windows) {
        if (q_index < w.estimates.size() && w.estimates[q_index]) out.push_back(w.estimates[q_index]->h);
    }
    return out;
}

GheTrajectory rolling_ghe(const LogPriceSeries& series, const RollingConfig& config) {
    config.validate();
    const auto starts = window_starts(series.size(), config.window, config.shift, config.anchor);

    std::optional<WeightVector> weights;
    if (config.weighted) weights = exp_weights(config.window, config.theta);
    const WeightVector* wp = weights ? &*weights : nullptr;

    GheTrajectory traj;
    traj.q_list = config.q_list;
    traj.windows.reserve(starts.size());
    const std::size_t nq = config.q_list.size();

    for (std::size_t start : starts) {
        WindowResult r;
        r.start = start;
        r.end_index = start + config.window - 1;
        if (series.has_dates()) r.end_date = series.timestamps()[r.end_index];
        r.estimates.resize(nq);
        r.failures.resize(nq);

        const auto window = series.window(start, config.window);
        for (std::size_t k = 0; k < nq; ++k) {
            try {
                r.estimates[k] = estimate_ghe(window, config.q_list[k], config.tau_max_range, wp);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::degenerate_series) throw;
                r.failures[k] = e.what();
            }
        }
        for (std::size_t k = 0; k + 1 < nq; ++k) {
            if (r.estimates[k] && r.estimates[k + 1]) {
                r.widths.emplace_back(r.estimates[k]->h - r.estimates[k + 1]->h);
            } else {
                r.widths.emplace_back(std::nullopt);
            }
        }
        traj.windows.push_back(std::move(r));
    }
    return traj;
}

}  // namespace hurstlab
