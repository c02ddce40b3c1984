#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hurstlab/core.hpp"

namespace hurstlab {

/// Inclusive range of the largest lag used in each log-log fit.
struct TauMaxRange {
    std::size_t lo = 5;
    std::size_t hi = 19;

    std::size_t size() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
};

enum class Normalization {
    by_level,  // divide by <|S(t)|^q>, the standard definition
    none,      // numerator only
};

/// K_q(tau) for tau = 1..tau_max.
struct StructureFunction {
    double q = 1.0;
    std::vector<std::size_t> lags;
    std::vector<double> values;
    bool weighted = false;
    std::optional<double> theta;
};

struct GheEstimate {
    double q = 1.0;
    double h = 0.0;
    double sigma = 0.0;  // population standard deviation of per_tau_max
    TauMaxRange tau_max_range;
    std::vector<double> per_tau_max;
    std::vector<std::size_t> excluded_lags;  // lags with K_q = 0, left out of every fit
};

/// `window` is ordered oldest first. When `weights` is given its length must
/// equal the window length; lagged averages use the leading weights
/// renormalised so the latest increment always has weight index 0.
StructureFunction structure_function(std::span<const double> window, double q, std::size_t tau_max,
                                     const WeightVector* weights = nullptr,
                                     Normalization normalization = Normalization::by_level);

/// Ordinary least squares of ln K on ln tau for each tau_max in `range`.
GheEstimate fit_scaling(const StructureFunction& sf, TauMaxRange range = {});

GheEstimate estimate_ghe(std::span<const double> window, double q, TauMaxRange range = {},
                         const WeightVector* weights = nullptr,
                         Normalization normalization = Normalization::by_level);

/// H(q1) - H(q2) with shared window, range and weights.
double multifractality_width(std::span<const double> window, double q1, double q2,
                             TauMaxRange range = {}, const WeightVector* weights = nullptr);

}  // namespace hurstlab
