#ifndef TLEA_ORACLE_CHERNOFF_HPP
#define TLEA_ORACLE_CHERNOFF_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace tlea::oracle {

enum class Tail { Upper, Lower };

/// Pr[X <= (1-delta) E[X]] <= exp(-delta^2 E[X] / 2) for sums of [0,1]
/// variables, delta in [0, 1].
template <class Scalar>
Scalar chernoff_lower(Scalar expectation, Scalar delta) {
    using std::exp;
    if (!(delta >= Scalar(0) && delta <= Scalar(1))) {
        throw std::domain_error("chernoff_lower: delta must lie in [0, 1]");
    }
    if (expectation < Scalar(0)) {
        throw std::domain_error("chernoff_lower: expectation must be non-negative");
    }
    return exp(-delta * delta * expectation / Scalar(2));
}

/// Pr[X >= E[X] + lambda] <= exp(-2 lambda^2 / sum_i c_i) where variable i
/// ranges over an interval of length c_i. The denominator is the plain sum of
/// the lengths, as in the source statement.
template <class Scalar>
Scalar chernoff_additive(std::span<const Scalar> lengths, Scalar lambda) {
    using std::exp;
    if (!(lambda >= Scalar(0))) {
        throw std::domain_error("chernoff_additive: lambda must be non-negative");
    }
    if (lengths.empty()) {
        throw std::domain_error("chernoff_additive: need at least one variable");
    }
    Scalar total(0);
    for (Scalar c : lengths) {
        if (!(c > Scalar(0))) {
            throw std::domain_error("chernoff_additive: interval lengths must be positive");
        }
        total += c;
    }
    return exp(Scalar(-2) * lambda * lambda / total);
}

/// Bounds for a sum of m i.i.d. geometric(p) variables:
///   upper: Pr[X >= (1+delta) E[X]] <= exp(-delta^2 (m-1) / (2 (1+delta))), delta >= 0
///   lower: Pr[X <= (1-delta) E[X]] <= exp(-delta^2 m / (2 - 4 delta / 3)), delta in [0, 1]
/// p only enters through E[X] = m / p, so it is validated but unused.
template <class Scalar>
Scalar chernoff_geometric(std::size_t m, Scalar p, Scalar delta, Tail side) {
    using std::exp;
    if (m < 1) {
        throw std::domain_error("chernoff_geometric: need m >= 1");
    }
    if (!(p > Scalar(0) && p <= Scalar(1))) {
        throw std::domain_error("chernoff_geometric: p must lie in (0, 1]");
    }
    const Scalar mm = static_cast<Scalar>(m);
    if (side == Tail::Upper) {
        if (!(delta >= Scalar(0))) {
            throw std::domain_error("chernoff_geometric: delta must be non-negative");
        }
        return exp(-delta * delta * (mm - Scalar(1)) / (Scalar(2) * (Scalar(1) + delta)));
    }
    if (!(delta >= Scalar(0) && delta <= Scalar(1))) {
        throw std::domain_error("chernoff_geometric: lower tail needs delta in [0, 1]");
    }
    return exp(-delta * delta * mm / (Scalar(2) - Scalar(4) * delta / Scalar(3)));
}

}  // namespace tlea::oracle

#endif  // TLEA_ORACLE_CHERNOFF_HPP
