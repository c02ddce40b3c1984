#pragma once

#include <cstdint>
#include <limits>

namespace hurstlab {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of sub-stream `index` of `seed`. Ensemble members and bootstrap
/// replicates draw from derive_seed(seed, i) so their output does not depend
/// on evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) + mix64(index + 0x9e3779b97f4a7c15ULL));
}

/// Counter-based generator: the i-th draw is mix64(key + i * gamma). The
/// variate transforms below are written out so sequences are identical on
/// every standard library.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed) noexcept : key_(mix64(seed)) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    /// Uniform on (0, 1).
    double uniform_open() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }
    double exponential() noexcept;
    double normal() noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hurstlab
