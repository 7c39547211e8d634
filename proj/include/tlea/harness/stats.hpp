#ifndef TLEA_HARNESS_STATS_HPP
#define TLEA_HARNESS_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <span>

namespace tlea::harness {

struct Interval {
    double low;
    double high;

    bool contains(double x) const noexcept { return low <= x && x <= high; }
};

/// Inverse of the standard normal CDF. Requires 0 < p < 1.
double normal_quantile(double p);

/// Wilson score interval for `successes` out of `trials` at two-sided
/// confidence level `confidence` (e.g. 0.95). Clamped to [0, 1].
Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence);

/// Sample mean and unbiased variance. Mean is NaN for an empty sample,
/// variance is NaN for fewer than two values.
struct Moments {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;
};

Moments sample_moments(std::span<const double> values);

/// sqrt(p (1-p) / trials).
double binomial_standard_error(double p, std::size_t trials);

}  // namespace tlea::harness

#endif  // TLEA_HARNESS_STATS_HPP
