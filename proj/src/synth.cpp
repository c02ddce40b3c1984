#include "hurstlab/synth.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <string>

#include "hurstlab/error.hpp"

namespace hurstlab {

namespace {

// The FFTW planner is not re-entrant; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// In-place forward DFT (unnormalised).
void forward_dft(std::vector<std::complex<double>>& data) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw Error(ErrorKind::numeric_failure, "FFT planning failed");
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

std::vector<double> cumulative_walk(std::span<const double> increments) {
    std::vector<double> x(increments.size() + 1, 0.0);
    for (std::size_t i = 0; i < increments.size(); ++i) x[i + 1] = x[i] + increments[i];
    return x;
}

std::vector<double> generate_values(const GeneratorSpec& spec) {
    const std::size_t steps = spec.length - 1;
    CounterRng rng(spec.seed);
    switch (spec.kind) {
        case GeneratorKind::gaussian_walk: {
            std::vector<double> eta(steps);
            for (double& e : eta) e = rng.normal();
            return cumulative_walk(eta);
        }
        case GeneratorKind::fbm: {
            const auto eta = spec.fbm_method == FbmMethod::davies_harte
                                 ? fgn_davies_harte(steps, spec.hurst, rng)
                                 : fgn_hosking(steps, spec.hurst, rng);
            return cumulative_walk(eta);
        }
        case GeneratorKind::levy_walk: {
            std::vector<double> eta(steps);
            for (double& e : eta) e = stable_symmetric(spec.alpha, rng);
            return cumulative_walk(eta);
        }
        case GeneratorKind::regime_splice: {
            auto first = generate_values(spec.segments[0]);
            const auto second = generate_values(spec.segments[1]);
            // Second segment shifted so it starts exactly where the first ends.
            const double anchor = first.back();
            const double origin = second.front();
            first.reserve(spec.length);
            for (double v : second) first.push_back(anchor + (v - origin));
            return first;
        }
    }
    throw Error(ErrorKind::invalid_parameter, "unknown generator kind");
}

}  // namespace

void GeneratorSpec::validate() const {
    if (length < 2) throw Error(ErrorKind::invalid_parameter, "generated length must be >= 2");
    switch (kind) {
        case GeneratorKind::gaussian_walk:
            break;
        case GeneratorKind::fbm:
            if (!(hurst > 0.0 && hurst < 1.0)) {
                throw Error(ErrorKind::invalid_parameter, "fbm Hurst exponent must lie in (0, 1)");
            }
            break;
        case GeneratorKind::levy_walk:
            if (!(alpha > 0.0 && alpha <= 2.0)) {
                throw Error(ErrorKind::invalid_parameter, "stable index must lie in (0, 2]");
            }
            break;
        case GeneratorKind::regime_splice:
            if (segments.size() != 2) {
                throw Error(ErrorKind::invalid_parameter, "regime splice needs exactly two segments");
            }
            if (segments[0].length != splice_at || segments[0].length + segments[1].length != length) {
                throw Error(ErrorKind::invalid_parameter,
                            "segment lengths must be splice_at and length - splice_at");
            }
            segments[0].validate();
            segments[1].validate();
            break;
    }
}

LogPriceSeries generate(const GeneratorSpec& spec) {
    spec.validate();
    auto values = generate_values(spec);
    for (double v : values) {
        if (!std::isfinite(v)) throw Error(ErrorKind::numeric_failure, "generated walk overflowed");
    }
    return LogPriceSeries(std::move(values));
}

GeneratorSpec make_splice(GeneratorSpec first, GeneratorSpec second, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::regime_splice;
    spec.length = first.length + second.length;
    spec.splice_at = first.length;
    spec.seed = seed;
    spec.segments = {std::move(first), std::move(second)};
    return spec;
}

double fgn_autocovariance(std::size_t k, double hurst) noexcept {
    const double h2 = 2.0 * hurst;
    const double kd = static_cast<double>(k);
    if (k == 0) return 1.0;
    return 0.5 * (std::pow(kd + 1.0, h2) - 2.0 * std::pow(kd, h2) + std::pow(kd - 1.0, h2));
}

std::vector<double> circulant_eigenvalues(std::span<const double> autocov) {
    const std::size_t n = autocov.size();
    if (n < 2) throw Error(ErrorKind::invalid_parameter, "embedding needs at least 2 lags");
    const std::size_t m = 2 * (n - 1);
    std::vector<std::complex<double>> row(m);
    for (std::size_t k = 0; k < n; ++k) row[k] = autocov[k];
    for (std::size_t k = n; k < m; ++k) row[k] = autocov[m - k];
    forward_dft(row);
    std::vector<double> lambda(m);
    for (std::size_t k = 0; k < m; ++k) lambda[k] = row[k].real();
    return lambda;
}

std::vector<double> circulant_gaussian(std::span<const double> autocov, CounterRng& rng) {
    const std::size_t n = autocov.size();
    if (n == 0) return {};
    if (n == 1) return {std::sqrt(autocov[0]) * rng.normal()};

    const auto lambda = circulant_eigenvalues(autocov);
    const std::size_t m = lambda.size();
    double scale = 0.0;
    for (double l : lambda) scale = std::max(scale, std::fabs(l));
    const double tol = 1e-10 * scale;

    std::vector<std::complex<double>> z(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (lambda[k] < -tol) {
            throw Error(ErrorKind::generator_failure,
                        "circulant embedding has a negative eigenvalue (" + std::to_string(lambda[k]) +
                            "); use the hosking fbm method instead");
        }
        const double amp = std::sqrt(std::max(lambda[k], 0.0) / static_cast<double>(m));
        const double re = rng.normal();
        const double im = rng.normal();
        z[k] = {amp * re, amp * im};
    }
    forward_dft(z);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = z[i].real();
    return out;
}

std::vector<double> fgn_davies_harte(std::size_t n, double hurst, CounterRng& rng) {
    std::vector<double> autocov(n);
    for (std::size_t k = 0; k < n; ++k) autocov[k] = fgn_autocovariance(k, hurst);
    return circulant_gaussian(autocov, rng);
}

std::vector<double> fgn_hosking(std::size_t n, double hurst, CounterRng& rng) {
    std::vector<double> out(n);
    if (n == 0) return out;
    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k) gamma[k] = fgn_autocovariance(k, hurst);

    // Durbin-Levinson: phi holds the partial regression coefficients of the
    // next value on the previous ones, v the innovation variance.
    std::vector<double> phi(n, 0.0), prev(n, 0.0);
    double v = gamma[0];
    out[0] = std::sqrt(v) * rng.normal();
    for (std::size_t t = 1; t < n; ++t) {
        double num = gamma[t];
        for (std::size_t j = 1; j < t; ++j) num -= prev[j] * gamma[t - j];
        const double kappa = num / v;
        phi[t] = kappa;
        for (std::size_t j = 1; j < t; ++j) phi[j] = prev[j] - kappa * prev[t - j];
        v *= (1.0 - kappa * kappa);
        if (!(v > 0.0)) throw Error(ErrorKind::generator_failure, "innovation variance collapsed");
        double mean = 0.0;
        for (std::size_t j = 1; j <= t; ++j) mean += phi[j] * out[t - j];
        out[t] = mean + std::sqrt(v) * rng.normal();
        std::copy(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(t + 1), prev.begin());
    }
    return out;
}

double stable_symmetric(double alpha, CounterRng& rng) noexcept {
    const double v = std::numbers::pi * (rng.uniform_open() - 0.5);
    const double w = rng.exponential();
    if (alpha == 1.0) return std::tan(v);
    return std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
}

}  // namespace hurstlab
