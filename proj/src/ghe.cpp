#include "hurstlab/ghe.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hurstlab/error.hpp"

namespace hurstlab {

namespace {

double abs_pow(double x, double q) {
    const double a = std::fabs(x);
    if (q == 1.0) return a;
    if (q == 2.0) return a * a;
    return std::pow(a, q);
}

// OLS slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace

StructureFunction structure_function(std::span<const double> window, double q, std::size_t tau_max,
                                     const WeightVector* weights, Normalization normalization) {
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw Error(ErrorKind::invalid_parameter, "moment order q must be positive");
    }
    if (tau_max < 2) throw Error(ErrorKind::invalid_parameter, "tau_max must be >= 2");
    const std::size_t n = window.size();
    if (n <= tau_max + 1) {
        throw Error(ErrorKind::insufficient_data,
                    "window of " + std::to_string(n) + " points is too short for tau_max " +
                        std::to_string(tau_max));
    }
    if (weights != nullptr && weights->window() != n) {
        throw Error(ErrorKind::invalid_parameter,
                    "weight vector length " + std::to_string(weights->window()) +
                        " does not match window length " + std::to_string(n));
    }

    StructureFunction sf;
    sf.q = q;
    sf.weighted = weights != nullptr;
    if (weights != nullptr) sf.theta = weights->theta();
    sf.lags.resize(tau_max);
    sf.values.resize(tau_max);

    // prefix[k] = w_0 + ... + w_{k-1}, the normaliser of a length-k truncation.
    std::vector<double> prefix;
    if (weights != nullptr) {
        prefix.resize(n + 1, 0.0);
        for (std::size_t s = 0; s < n; ++s) prefix[s + 1] = prefix[s] + (*weights)[s];
    }

    double level = 1.0;
    if (normalization == Normalization::by_level) {
        level = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double w = weights ? (*weights)[n - 1 - t] : 1.0;
            level += w * abs_pow(window[t], q);
        }
        level /= weights ? prefix[n] : static_cast<double>(n);
        if (!(level > 0.0)) {
            throw Error(ErrorKind::degenerate_series, "series level <|S|^q> is zero");
        }
    }

    bool any_positive = false;
    for (std::size_t tau = 1; tau <= tau_max; ++tau) {
        const std::size_t m = n - tau;  // number of increments at this lag
        double acc = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            const double w = weights ? (*weights)[m - 1 - t] : 1.0;
            acc += w * abs_pow(window[t + tau] - window[t], q);
        }
        acc /= weights ? prefix[m] : static_cast<double>(m);
        sf.lags[tau - 1] = tau;
        sf.values[tau - 1] = acc / level;
        if (!std::isfinite(sf.values[tau - 1])) {
            throw Error(ErrorKind::numeric_failure, "non-finite structure function value");
        }
        any_positive = any_positive || acc > 0.0;
    }
    if (!any_positive) {
        throw Error(ErrorKind::degenerate_series, "all increments are zero; no scaling fit possible");
    }
    return sf;
}

GheEstimate fit_scaling(const StructureFunction& sf, TauMaxRange range) {
    if (range.lo < 3) {
        throw Error(ErrorKind::invalid_parameter, "each fit needs at least 3 lags (tau_max >= 3)");
    }
    if (range.hi < range.lo) throw Error(ErrorKind::invalid_parameter, "empty tau_max range");
    if (sf.values.size() < range.hi) {
        throw Error(ErrorKind::invalid_parameter, "structure function shorter than tau_max range");
    }

    GheEstimate est;
    est.q = sf.q;
    est.tau_max_range = range;

    std::vector<double> log_tau, log_k;
    for (std::size_t i = 0; i < range.hi; ++i) {
        if (sf.values[i] > 0.0) continue;
        est.excluded_lags.push_back(sf.lags[i]);
    }

    for (std::size_t tau_max = range.lo; tau_max <= range.hi; ++tau_max) {
        log_tau.clear();
        log_k.clear();
        for (std::size_t i = 0; i < tau_max; ++i) {
            if (!(sf.values[i] > 0.0)) continue;
            log_tau.push_back(std::log(static_cast<double>(sf.lags[i])));
            log_k.push_back(std::log(sf.values[i]));
        }
        if (log_tau.size() < 3) {
            throw Error(ErrorKind::degenerate_series,
                        "fewer than 3 lags with non-zero structure function at tau_max " +
                            std::to_string(tau_max));
        }
        est.per_tau_max.push_back(ols_slope(log_tau, log_k) / sf.q);
    }

    const double k = static_cast<double>(est.per_tau_max.size());
    est.h = std::accumulate(est.per_tau_max.begin(), est.per_tau_max.end(), 0.0) / k;
    double ss = 0.0;
    for (double v : est.per_tau_max) ss += (v - est.h) * (v - est.h);
    est.sigma = std::sqrt(ss / k);
    return est;
}

GheEstimate estimate_ghe(std::span<const double> window, double q, TauMaxRange range,
                         const WeightVector* weights, Normalization normalization) {
    if (range.lo < 3) {
        throw Error(ErrorKind::invalid_parameter, "each fit needs at least 3 lags (tau_max >= 3)");
    }
    if (range.hi < range.lo) throw Error(ErrorKind::invalid_parameter, "empty tau_max range");
    return fit_scaling(structure_function(window, q, range.hi, weights, normalization), range);
}

double multifractality_width(std::span<const double> window, double q1, double q2,
                             TauMaxRange range, const WeightVector* weights) {
    if (q1 == q2) throw Error(ErrorKind::invalid_parameter, "q1 and q2 must differ");
    return estimate_ghe(window, q1, range, weights).h - estimate_ghe(window, q2, range, weights).h;
}

}  // namespace hurstlab
