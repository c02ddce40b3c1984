#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hurstlab/core.hpp"
#include "hurstlab/random.hpp"

namespace hurstlab {

enum class GeneratorKind { gaussian_walk, fbm, levy_walk, regime_splice };

enum class FbmMethod {
    davies_harte,  // circulant embedding, O(n log n)
    hosking,       // Durbin-Levinson recursion, O(n^2), always valid
};

/// Synthetic log-price process with a known scaling exponent. Every walk
/// starts at 0 and has length - 1 increments.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::gaussian_walk;
    std::size_t length = 0;
    double hurst = 0.5;  // fbm
    double alpha = 2.0;  // levy_walk, stable index in (0, 2]
    FbmMethod fbm_method = FbmMethod::davies_harte;
    // regime_splice: exactly two segments; the first has length splice_at and
    // the lengths add up to `length`.
    std::size_t splice_at = 0;
    std::vector<GeneratorSpec> segments;
    std::uint64_t seed = 0;

    void validate() const;
};

LogPriceSeries generate(const GeneratorSpec& spec);

/// Splice helper: first segment covers [0, splice_at), second the rest. Each
/// segment keeps its own seed; `seed` is recorded on the outer spec only.
GeneratorSpec make_splice(GeneratorSpec first, GeneratorSpec second, std::uint64_t seed = 0);

/// Autocovariance of unit-variance fractional Gaussian noise at lag k.
double fgn_autocovariance(std::size_t k, double hurst) noexcept;

/// n points of a stationary Gaussian sequence with autocovariance
/// `autocov[0..n-1]` by circulant embedding. Throws generator_failure when the
/// embedding has a negative eigenvalue.
std::vector<double> circulant_gaussian(std::span<const double> autocov, CounterRng& rng);

/// Eigenvalues of the minimal circulant embedding (size 2(n-1)) of `autocov`.
std::vector<double> circulant_eigenvalues(std::span<const double> autocov);

std::vector<double> fgn_davies_harte(std::size_t n, double hurst, CounterRng& rng);
std::vector<double> fgn_hosking(std::size_t n, double hurst, CounterRng& rng);

/// Symmetric alpha-stable variate (unit scale) by the Chambers-Mallows-Stuck
/// transform. alpha = 2 gives N(0, 2).
double stable_symmetric(double alpha, CounterRng& rng) noexcept;

}  // namespace hurstlab
