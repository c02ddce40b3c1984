#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hurstlab/core.hpp"
#include "hurstlab/ghe.hpp"

namespace hurstlab {

enum class Anchor { start, end };

struct RollingConfig {
    std::size_t window = 750;
    std::size_t shift = 50;
    double theta = 250.0;
    bool weighted = true;
    std::vector<double> q_list{1.0, 1.5};
    TauMaxRange tau_max_range{};
    Anchor anchor = Anchor::end;

    void validate() const;
};

/// floor((n - window) / shift) + 1, or 0 when n < window.
std::size_t window_count(std::size_t n, std::size_t window, std::size_t shift) noexcept;

/// Start index of every window. With Anchor::end the last window finishes on
/// the last observation.
std::vector<std::size_t> window_starts(std::size_t n, std::size_t window, std::size_t shift,
                                       Anchor anchor);

struct WindowResult {
    std::size_t start = 0;
    std::size_t end_index = 0;  // inclusive
    std::optional<Date> end_date;
    // One slot per q in the config; empty marks a gap (failure holds the reason).
    std::vector<std::optional<GheEstimate>> estimates;
    std::vector<std::string> failures;
    // H(q_k) - H(q_{k+1}) for each adjacent pair of q values.
    std::vector<std::optional<double>> widths;
};

struct GheTrajectory {
    std::vector<double> q_list;
    std::vector<WindowResult> windows;

    /// h of q_list[q_index] for every window, gaps skipped.
    std::vector<double> h_values(std::size_t q_index = 0) const;
};

GheTrajectory rolling_ghe(const LogPriceSeries& series, const RollingConfig& config = {});

}  // namespace hurstlab
