#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hurstlab/core.hpp"

namespace hurstlab {

/// Rank-frequency complementary distribution: the sorted observations against
/// [1, (T-1)/T, ..., 1/T].
struct Ccdf {
    std::vector<double> sorted_values;
    std::vector<double> exceedance_probs;
};

Ccdf ccdf(std::span<const double> values, bool absolute = false);

/// Cutoff chosen by the caller. Every value >= x_min is tail.
struct FixedXmin {
    double x_min = 1.0;
    std::size_t min_tail = 1;
};

/// Cutoff chosen among the distinct data values (with at least min_tail
/// points at or above it) to minimise the Kolmogorov-Smirnov distance. Ties go
/// to the smaller cutoff.
struct KsScan {
    std::size_t min_tail = 50;
};

using XminStrategy = std::variant<FixedXmin, KsScan>;

/// Continuous power-law fit p(x) ~ x^-alpha for x >= x_min. The complementary
/// distribution then falls as x^-(alpha-1); tail_index() returns that
/// exponent, the one compared against the Hurst exponent.
struct TailFit {
    double alpha = 0.0;
    double x_min = 0.0;
    std::size_t n_tail = 0;
    std::size_t n_total = 0;
    double ks_statistic = 0.0;
    std::optional<double> p_value;
    std::size_t boot_replicates = 0;
    XminStrategy strategy = KsScan{};

    double tail_index() const noexcept { return alpha - 1.0; }
};

TailFit fit_tail(std::span<const double> values, const XminStrategy& strategy = KsScan{});

/// Kolmogorov-Smirnov distance between the empirical distribution of
/// `sorted_tail` (ascending, all >= x_min) and the fitted power law.
double ks_distance(std::span<const double> sorted_tail, double alpha, double x_min);

/// Semiparametric bootstrap goodness-of-fit probability. Each replicate keeps
/// the sample size, draws each point from the fitted power law with
/// probability n_tail/n and otherwise from the empirical body below x_min,
/// then refits with the same strategy. Replicate i uses derive_seed(seed, i).
double tail_pvalue(std::span<const double> values, const TailFit& fit, std::size_t replicates,
                   std::uint64_t seed);

/// fit_tail followed by tail_pvalue; replicates == 0 leaves p_value empty.
TailFit fit_tail_with_pvalue(std::span<const double> values, const XminStrategy& strategy,
                             std::size_t replicates, std::uint64_t seed);

/// Random-walk scaling relation: 1/alpha below 2, 1/2 from 2 upwards, where
/// alpha is the exponent of the complementary distribution.
double theoretical_hurst(double tail_index);

/// m4 / m2^2 - 3 with population (biased) central moments.
double excess_kurtosis(std::span<const double> values);

enum class TailSide {
    absolute,  // |r|
    upper,     // r for r > 0
    lower,     // -r for r < 0
};

std::vector<double> tail_sample(std::span<const double> returns, TailSide side = TailSide::absolute);

/// Inclusive calendar range. from > to denotes an empty range.
struct DateRange {
    Date from;
    Date to;

    bool contains(Date d) const noexcept { return from <= d && d <= to; }
};

struct SplitPeriodFit {
    TailFit full;      // every return
    TailFit excluded;  // returns dated inside the range removed
    std::size_t n_removed = 0;
    std::vector<double> kept_returns;
};

SplitPeriodFit split_period_fit(const ReturnSeries& returns, DateRange exclusion,
                                const XminStrategy& strategy = KsScan{},
                                TailSide side = TailSide::absolute);

}  // namespace hurstlab
