#include "tlea/oracle/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tlea::oracle {

namespace {

constexpr double kE = std::numbers::e;

BoundValue make_bound(double v) {
    return BoundValue{v, !(v > 0.0 && v <= 1.0)};
}

void check_population_args(double n, double mu, double delta) {
    if (n < 2) {
        throw std::domain_error("bound: n must be at least 2");
    }
    if (mu < 1) {
        throw std::domain_error("bound: mu must be at least 1");
    }
    if (!(delta > 0)) {
        throw std::domain_error("bound: delta must be positive");
    }
}

double population_core(double n, double mu, double delta, double tail_coefficient) {
    check_population_args(n, mu, delta);
    return 1.0 - (mu + 2.0) * std::exp(-n / 8.0) -
           std::exp(-delta * delta * (n - 1.0) / (2.0 * (1.0 + delta))) -
           tail_coefficient * n * std::exp(-std::sqrt(n) / 20.0);
}

}  // namespace

BoundValue theorem1_bound(double n) {
    if (n < 2) {
        throw std::domain_error("theorem1_bound: n must be at least 2");
    }
    const double c = std::cbrt(n);
    return make_bound(1.0 - (n + 1.0) * std::exp(-c / kE) - (kE + 1.0) / c);
}

BoundValue theorem2_bound(double n, double mu, double delta) {
    return make_bound(population_core(n, mu, delta, 2.0));
}

BoundValue theorem3_bound(double n, double mu, double delta) {
    return make_bound(population_core(n, mu, delta, 3.0));
}

std::size_t min_population(std::size_t n, double delta) {
    if (!(delta > 0)) {
        throw std::domain_error("min_population: delta must be positive");
    }
    const double raw = 4.0 * (1.0 + delta) * (3.0 * kE + 1.0) * (static_cast<double>(n) + 1.0);
    return static_cast<std::size_t>(std::ceil(raw));
}

double population_theorem_min_n(double delta) {
    const double base = 4.0 * (1.0 + delta) * kE;
    return base * base;
}

}  // namespace tlea::oracle
