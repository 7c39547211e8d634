#ifndef TLEA_ORACLE_MONOTONE_HPP
#define TLEA_ORACLE_MONOTONE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tlea/oracle/binomial.hpp"

namespace tlea::oracle {

// Helper functions from the population analysis. Each has a log form; the
// plain form underflows quickly (h1(d) ~ n^{-d-1}), so comparisons should use
// the logs.

namespace detail {

inline void check_h_domain(int a, int n) {
    if (a < 1 || n <= a) {
        throw std::domain_error("h1/h2: need 1 <= a < n");
    }
}

}  // namespace detail

/// log of C(a+d-1, d) / n^{d+1}, d in [0, n-a-1].
template <class Scalar = long double>
Scalar log_h1(int a, int n, int d) {
    using std::log;
    detail::check_h_domain(a, n);
    if (d < 0 || d > n - a - 1) {
        throw std::domain_error("h1: d must lie in [0, n-a-1]");
    }
    return log_binomial<Scalar>(a + d - 1, d) - Scalar(d + 1) * log(Scalar(n));
}

/// log of C(a+d-1, d-1) / n^d, d in [1, n-a].
template <class Scalar = long double>
Scalar log_h2(int a, int n, int d) {
    using std::log;
    detail::check_h_domain(a, n);
    if (d < 1 || d > n - a) {
        throw std::domain_error("h2: d must lie in [1, n-a]");
    }
    return log_binomial<Scalar>(a + d - 1, d - 1) - Scalar(d) * log(Scalar(n));
}

template <class Scalar = long double>
Scalar h1(int a, int n, int d, Precision precision = Precision::LogSpace) {
    using std::exp;
    using std::pow;
    if (precision == Precision::LogSpace) {
        return exp(log_h1<Scalar>(a, n, d));
    }
    (void)log_h1<Scalar>(a, n, d);  // domain check
    const PascalTable<Scalar> binom(static_cast<std::size_t>(a + d - 1));
    return binom(a + d - 1, d) / pow(Scalar(n), d + 1);
}

template <class Scalar = long double>
Scalar h2(int a, int n, int d, Precision precision = Precision::LogSpace) {
    using std::exp;
    using std::pow;
    if (precision == Precision::LogSpace) {
        return exp(log_h2<Scalar>(a, n, d));
    }
    (void)log_h2<Scalar>(a, n, d);
    const PascalTable<Scalar> binom(static_cast<std::size_t>(a + d - 1));
    return binom(a + d - 1, d - 1) / pow(Scalar(n), d);
}

/// log of a^a / n^{a^2} for a in [1, sqrt(n)].
template <class Scalar = long double>
Scalar log_g_fn(Scalar a, Scalar n) {
    using std::log;
    using std::sqrt;
    if (!(n >= Scalar(1)) || !(a >= Scalar(1)) || a > sqrt(n)) {
        throw std::domain_error("g: need n >= 1 and a in [1, sqrt(n)]");
    }
    return a * log(a) - a * a * log(n);
}

template <class Scalar = long double>
Scalar g_fn(Scalar a, Scalar n) {
    using std::exp;
    return exp(log_g_fn<Scalar>(a, n));
}

/// Whether (3/4)^{sqrt(n)-1} <= n^{-1/2}; defined for n > (4e)^2.
template <class Scalar = long double>
bool aux_ineq(Scalar n) {
    using std::log;
    using std::sqrt;
    const Scalar threshold = Scalar(16) * std::numbers::e_v<Scalar> * std::numbers::e_v<Scalar>;
    if (!(n > threshold)) {
        throw std::domain_error("aux_ineq: requires n > (4e)^2");
    }
    return (sqrt(n) - Scalar(1)) * log(Scalar(3) / Scalar(4)) <= Scalar(-0.5) * log(n);
}

}  // namespace tlea::oracle

#endif  // TLEA_ORACLE_MONOTONE_HPP
