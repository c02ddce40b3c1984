#include "hurstlab/random.hpp"

#include <cmath>
#include <numbers>

namespace hurstlab {

double CounterRng::exponential() noexcept { return -std::log(uniform_open()); }

// Box-Muller; the second variate of each pair is kept for the next call.
double CounterRng::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_normal_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace hurstlab
