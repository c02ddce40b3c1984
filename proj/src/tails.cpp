#include "hurstlab/tails.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hurstlab/error.hpp"
#include "hurstlab/random.hpp"

namespace hurstlab {

namespace {

void require_finite(std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(ErrorKind::invalid_input, "value at index " + std::to_string(i) + " is not finite");
        }
    }
}

TailFit fit_fixed(std::span<const double> values, const FixedXmin& fixed) {
    if (!(fixed.x_min > 0.0) || !std::isfinite(fixed.x_min)) {
        throw Error(ErrorKind::invalid_parameter, "x_min must be positive and finite");
    }
    std::vector<double> tail;
    for (double v : values) {
        if (v >= fixed.x_min) tail.push_back(v);
    }
    const std::size_t needed = std::max<std::size_t>(fixed.min_tail, 1);
    if (tail.size() < needed) {
        throw Error(ErrorKind::insufficient_data,
                    std::to_string(tail.size()) + " tail points at or above x_min, need " +
                        std::to_string(needed));
    }
    // Sorting fixes the summation order, so the estimate is permutation invariant.
    std::sort(tail.begin(), tail.end());
    double sum_log = 0.0;
    for (double v : tail) sum_log += std::log(v / fixed.x_min);
    if (!(sum_log > 0.0)) {
        throw Error(ErrorKind::degenerate_tail, "all tail points equal x_min; exponent is infinite");
    }

    TailFit fit;
    fit.alpha = 1.0 + static_cast<double>(tail.size()) / sum_log;
    fit.x_min = fixed.x_min;
    fit.n_tail = tail.size();
    fit.n_total = values.size();
    fit.ks_statistic = ks_distance(tail, fit.alpha, fit.x_min);
    fit.strategy = fixed;
    return fit;
}

TailFit fit_scan(std::span<const double> values, const KsScan& scan) {
    std::vector<double> x;
    for (double v : values) {
        if (v > 0.0) x.push_back(v);
    }
    const std::size_t min_tail = std::max<std::size_t>(scan.min_tail, 2);
    if (x.size() < min_tail) {
        throw Error(ErrorKind::insufficient_data,
                    std::to_string(x.size()) + " positive values, need at least " +
                        std::to_string(min_tail) + " in the tail");
    }
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    std::vector<double> lx(n);
    for (std::size_t i = 0; i < n; ++i) lx[i] = std::log(x[i]);
    std::vector<double> suffix(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + lx[i];

    // KS distance of the candidate starting at index k, abandoned (returning
    // something > bound) once it provably exceeds bound.
    auto candidate_ks = [&](std::size_t k, double bound) {
        const std::size_t m = n - k;
        const double sum_log = suffix[k] - static_cast<double>(m) * lx[k];
        if (!(sum_log > 0.0)) return std::numeric_limits<double>::infinity();
        const double slope = static_cast<double>(m) / sum_log;  // alpha - 1
        const double inv_m = 1.0 / static_cast<double>(m);
        auto deviation = [&](std::size_t i) {
            const double model = -std::expm1(-slope * (lx[k + i] - lx[k]));
            const double lo = static_cast<double>(i) * inv_m;
            return std::max(std::fabs(model - lo), std::fabs(model - lo - inv_m));
        };
        double d = 0.0;
        constexpr std::size_t stride = 16;
        if (m > 4 * stride) {
            for (std::size_t i = stride / 2; i < m && d <= bound; i += stride) d = std::max(d, deviation(i));
        }
        for (std::size_t i = 0; i < m && d <= bound; ++i) d = std::max(d, deviation(i));
        return d;
    };
    auto first_of_value = [&](std::size_t k) {
        while (k > 0 && x[k - 1] == x[k]) --k;
        return k;
    };

    // Seed the bound from tail sizes min_tail, 2 min_tail, 4 min_tail, ...
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t m = min_tail; m <= n; m *= 2) {
        const std::size_t k = first_of_value(n - m);
        if (n - k < min_tail) continue;
        bound = std::min(bound, candidate_ks(k, bound));
    }

    // Exact pass in ascending order; strict improvement keeps ties on the smaller x_min.
    double best_ks = std::numeric_limits<double>::infinity();
    std::size_t best_k = n;
    for (std::size_t k = 0; k + min_tail <= n; ++k) {
        if (k > 0 && x[k] == x[k - 1]) continue;  // candidates are distinct values
        const double d = candidate_ks(k, bound);
        if (d <= bound && d < best_ks) {
            best_ks = d;
            best_k = k;
            bound = d;
        }
    }
    if (best_k == n) {
        throw Error(ErrorKind::degenerate_tail, "every candidate tail has zero log-spread");
    }
    TailFit fit = fit_fixed(values, FixedXmin{x[best_k], min_tail});
    fit.strategy = scan;
    return fit;
}

}  // namespace

Ccdf ccdf(std::span<const double> values, bool absolute) {
    if (values.empty()) throw Error(ErrorKind::insufficient_data, "ccdf of an empty sample");
    require_finite(values);
    Ccdf c;
    c.sorted_values.assign(values.begin(), values.end());
    if (absolute) {
        for (double& v : c.sorted_values) v = std::fabs(v);
    }
    std::sort(c.sorted_values.begin(), c.sorted_values.end());
    const std::size_t t = c.sorted_values.size();
    c.exceedance_probs.resize(t);
    for (std::size_t i = 0; i < t; ++i) {
        c.exceedance_probs[i] = static_cast<double>(t - i) / static_cast<double>(t);
    }
    return c;
}

double ks_distance(std::span<const double> sorted_tail, double alpha, double x_min) {
    const std::size_t m = sorted_tail.size();
    if (m == 0) throw Error(ErrorKind::insufficient_data, "empty tail");
    const double inv_m = 1.0 / static_cast<double>(m);
    double d = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double model = -std::expm1(-(alpha - 1.0) * std::log(sorted_tail[i] / x_min));
        const double lo = static_cast<double>(i) * inv_m;
        d = std::max({d, std::fabs(model - lo), std::fabs(model - lo - inv_m)});
    }
    return std::min(d, 1.0);
}

TailFit fit_tail(std::span<const double> values, const XminStrategy& strategy) {
    require_finite(values);
    return std::visit(
        [&](const auto& s) -> TailFit {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, FixedXmin>) {
                return fit_fixed(values, s);
            } else {
                return fit_scan(values, s);
            }
        },
        strategy);
}

double tail_pvalue(std::span<const double> values, const TailFit& fit, std::size_t replicates,
                   std::uint64_t seed) {
    if (replicates < 100) {
        throw Error(ErrorKind::invalid_parameter, "at least 100 bootstrap replicates are required");
    }
    if (!(fit.alpha > 1.0) || !(fit.x_min > 0.0)) {
        throw Error(ErrorKind::invalid_parameter, "fit does not describe a normalisable power law");
    }
    require_finite(values);

    std::vector<double> body;
    std::size_t n_tail = 0;
    for (double v : values) {
        if (v >= fit.x_min) {
            ++n_tail;
        } else {
            body.push_back(v);
        }
    }
    if (n_tail == 0) throw Error(ErrorKind::invalid_parameter, "fit does not match the sample");
    std::sort(body.begin(), body.end());

    const std::size_t n = values.size();
    const double p_tail = static_cast<double>(n_tail) / static_cast<double>(n);
    const double inv_slope = 1.0 / (fit.alpha - 1.0);

    std::size_t exceed = 0;
    std::vector<double> sample(n);
    for (std::size_t r = 0; r < replicates; ++r) {
        CounterRng rng(derive_seed(seed, r));
        for (std::size_t i = 0; i < n; ++i) {
            if (body.empty() || rng.uniform() < p_tail) {
                sample[i] = fit.x_min * std::pow(rng.uniform_open(), -inv_slope);
            } else {
                const auto idx = static_cast<std::size_t>(rng.uniform() * static_cast<double>(body.size()));
                sample[i] = body[std::min(idx, body.size() - 1)];
            }
        }
        const TailFit refit = fit_tail(sample, fit.strategy);
        if (refit.ks_statistic >= fit.ks_statistic) ++exceed;
    }
    return static_cast<double>(exceed) / static_cast<double>(replicates);
}

TailFit fit_tail_with_pvalue(std::span<const double> values, const XminStrategy& strategy,
                             std::size_t replicates, std::uint64_t seed) {
    TailFit fit = fit_tail(values, strategy);
    if (replicates > 0) {
        fit.p_value = tail_pvalue(values, fit, replicates, seed);
        fit.boot_replicates = replicates;
    }
    return fit;
}

double theoretical_hurst(double tail_index) {
    if (!(tail_index > 0.0)) throw Error(ErrorKind::invalid_parameter, "tail index must be > 0");
    return tail_index < 2.0 ? 1.0 / tail_index : 0.5;
}

double excess_kurtosis(std::span<const double> values) {
    if (values.size() < 4) throw Error(ErrorKind::insufficient_data, "kurtosis needs at least 4 values");
    require_finite(values);
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d2 = (v - mean) * (v - mean);
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= n;
    m4 /= n;
    if (!(m2 > 0.0)) throw Error(ErrorKind::degenerate_series, "zero variance");
    return m4 / (m2 * m2) - 3.0;
}

std::vector<double> tail_sample(std::span<const double> returns, TailSide side) {
    std::vector<double> out;
    out.reserve(returns.size());
    for (double r : returns) {
        switch (side) {
            case TailSide::absolute: out.push_back(std::fabs(r)); break;
            case TailSide::upper:
                if (r > 0.0) out.push_back(r);
                break;
            case TailSide::lower:
                if (r < 0.0) out.push_back(-r);
                break;
        }
    }
    return out;
}

SplitPeriodFit split_period_fit(const ReturnSeries& returns, DateRange exclusion,
                                const XminStrategy& strategy, TailSide side) {
    if (returns.timestamps().size() != returns.size()) {
        throw Error(ErrorKind::invalid_input, "period exclusion needs dated returns");
    }
    std::vector<double> kept;
    kept.reserve(returns.size());
    for (std::size_t i = 0; i < returns.size(); ++i) {
        if (!exclusion.contains(returns.timestamps()[i])) kept.push_back(returns.values()[i]);
    }
    if (kept.empty()) {
        throw Error(ErrorKind::insufficient_data, "exclusion range removes every return");
    }
    SplitPeriodFit out;
    out.full = fit_tail(tail_sample(returns.values(), side), strategy);
    out.excluded = fit_tail(tail_sample(kept, side), strategy);
    out.n_removed = returns.size() - kept.size();
    out.kept_returns = std::move(kept);
    return out;
}

}  // namespace hurstlab
