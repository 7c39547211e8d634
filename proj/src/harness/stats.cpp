#include "tlea/harness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tlea::harness {

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    }
    // Newton on Phi(x) = 0.5 erfc(-x / sqrt 2), started from a logistic guess.
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    double x = std::log(p / (1.0 - p)) * 0.6;
    for (int it = 0; it < 100; ++it) {
        const double cdf = 0.5 * std::erfc(-x * inv_sqrt2);
        const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
        if (pdf == 0.0) {
            break;
        }
        const double step = (cdf - p) / pdf;
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) {
            break;
        }
    }
    return x;
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence) {
    if (trials == 0) {
        throw std::domain_error("wilson_interval: trials must be at least 1");
    }
    if (successes > trials) {
        throw std::domain_error("wilson_interval: successes exceed trials");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::domain_error("wilson_interval: confidence must lie in (0, 1)");
    }
    const double z = normal_quantile(0.5 + 0.5 * confidence);
    const double nn = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    Interval out{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    if (successes == 0) {
        out.low = 0.0;
    }
    if (successes == trials) {
        out.high = 1.0;
    }
    return out;
}

Moments sample_moments(std::span<const double> values) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    Moments m;
    m.count = values.size();
    if (values.empty()) {
        m.mean = nan;
        m.variance = nan;
        return m;
    }
    // Welford
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double v : values) {
        ++k;
        const double d = v - mean;
        mean += d / static_cast<double>(k);
        m2 += d * (v - mean);
    }
    m.mean = mean;
    m.variance = k >= 2 ? m2 / static_cast<double>(k - 1) : nan;
    return m;
}

double binomial_standard_error(double p, std::size_t trials) {
    if (trials == 0) {
        throw std::domain_error("binomial_standard_error: trials must be at least 1");
    }
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace tlea::harness
