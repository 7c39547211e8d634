#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tlea/harness/stats.hpp"

using namespace tlea::harness;

namespace {

// Wilson interval from the textbook closed form with a fixed z.
Interval wilson_closed(double s, double t, double z) {
    const double p = s / t;
    const double z2 = z * z;
    const double centre = (p + z2 / (2 * t)) / (1 + z2 / t);
    const double half = z / (1 + z2 / t) * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t));
    return {centre - half, centre + half};
}

}  // namespace

TEST_CASE("normal quantiles") {
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-13));
    CHECK(normal_quantile(0.995) == doctest::Approx(2.5758293035489).epsilon(1e-12));
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(normal_quantile(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-13));
    CHECK_THROWS(normal_quantile(0.0));
    CHECK_THROWS(normal_quantile(1.0));
}

TEST_CASE("wilson interval") {
    const Interval none = wilson_interval(0, 10, 0.95);
    CHECK(none.low == 0.0);
    CHECK(none.high > 0.0);
    const Interval all = wilson_interval(10, 10, 0.95);
    CHECK(all.high == 1.0);
    CHECK(all.low < 1.0);
    const Interval half = wilson_interval(5, 10, 0.95);
    CHECK(half.low + half.high == doctest::Approx(1.0).epsilon(1e-14));

    for (auto [s, t] : {std::pair{3, 40}, std::pair{17, 20}, std::pair{500, 1000}, std::pair{1, 7}}) {
        const Interval w = wilson_interval(s, t, 0.99);
        const Interval ref = wilson_closed(s, t, 2.5758293035489);
        CHECK(w.low == doctest::Approx(ref.low).epsilon(1e-10));
        CHECK(w.high == doctest::Approx(ref.high).epsilon(1e-10));
        CHECK(w.contains(static_cast<double>(s) / t));
    }
    CHECK(wilson_interval(5, 10, 0.99).low < wilson_interval(5, 10, 0.95).low);
    CHECK_THROWS(wilson_interval(1, 0, 0.95));
    CHECK_THROWS(wilson_interval(3, 2, 0.95));
    CHECK_THROWS(wilson_interval(1, 2, 1.0));
}

TEST_CASE("sample moments") {
    const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
    const Moments m = sample_moments(v);
    CHECK(m.count == 8);
    CHECK(m.mean == doctest::Approx(5.0));
    CHECK(m.variance == doctest::Approx(32.0 / 7.0));

    const std::vector<double> one{3.5};
    CHECK(sample_moments(one).mean == 3.5);
    CHECK(std::isnan(sample_moments(one).variance));
    CHECK(std::isnan(sample_moments({}).mean));

    // Large offset: Welford keeps the small spread.
    const std::vector<double> shifted{1e9 + 1, 1e9 + 2, 1e9 + 3};
    CHECK(sample_moments(shifted).variance == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("binomial standard error") {
    CHECK(binomial_standard_error(0.5, 100) == doctest::Approx(0.05));
    CHECK(binomial_standard_error(0.0, 100) == 0.0);
}
