#ifndef TLEA_ORACLE_BOUNDS_HPP
#define TLEA_ORACLE_BOUNDS_HPP

#include <cstddef>

namespace tlea::oracle {

/// A probability lower bound, unclamped. `vacuous` is set when the value
/// falls outside (0, 1] and so says nothing.
struct BoundValue {
    double value;
    bool vacuous;
};

/// Lower bound on the probability that RLS / the (1+1) EA never reach the
/// optimum: 1 - (n+1) exp(-n^{1/3}/e) - (e+1)/n^{1/3}. Requires n >= 2.
BoundValue theorem1_bound(double n);

/// Lower bound on the (mu+1) EA success probability:
/// 1 - (mu+2) exp(-n/8) - exp(-delta^2 (n-1) / (2 (1+delta))) - 2n exp(-sqrt(n)/20).
BoundValue theorem2_bound(double n, double mu, double delta);

/// Probability of the conditioning event for the O(mu n) runtime claim; same
/// shape as theorem2_bound with a 3n coefficient on the last term.
BoundValue theorem3_bound(double n, double mu, double delta);

/// Smallest integer mu >= 4 (1+delta) (3e+1) (n+1).
std::size_t min_population(std::size_t n, double delta);

/// (4 (1+delta) e)^2; the theorems for the population algorithm need n above it.
double population_theorem_min_n(double delta);

}  // namespace tlea::oracle

#endif  // TLEA_ORACLE_BOUNDS_HPP
