#ifndef TLEA_ORACLE_MARKOV_HPP
#define TLEA_ORACLE_MARKOV_HPP

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "tlea/bitstring.hpp"
#include "tlea/mutation.hpp"

namespace tlea::oracle {

/// Absorbing classes of the single individual chain; also column indices of
/// AbsorptionResult::probabilities.
enum AbsorbingClass : int { kOptimum = 0, kEventI = 1, kEventII = 2 };

enum class StateClass { Transient, Optimum, EventI, EventII };

struct ChainOptions {
    /// Probability that an offspring pair of equal fitness replaces the
    /// incumbent. 1 is the single individual algorithm; 1/2 is the population
    /// algorithm with mu = 1, whose uniform removal among the two tied pairs
    /// keeps the incumbent half the time.
    double tie_acceptance = 1.0;
};

template <class Scalar>
struct AbsorptionResult {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 3>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Row = Eigen::Matrix<Scalar, 1, 3>;

    /// Row s: probabilities of ending in (optimum, event I, event II) from state s.
    Matrix probabilities;
    /// 1 - row sum of `probabilities`.
    Vector residual;
    /// Absorption probabilities from uniformly drawn x^0, x^1.
    Row uniform_start;
    /// Max-norm of (I - Q) B - R for the solved system.
    Scalar solver_residual = Scalar(0);

    Scalar failure_probability() const { return uniform_start(kEventI) + uniform_start(kEventII); }
    Scalar success_probability() const { return uniform_start(kOptimum); }
};

// ---------------------------------------------------------------------------
// Full chain over (stored first bit b, current string x): 2^{n+1} states.
// State index = b * 2^n + x, where bit i of x is string position i.

std::size_t full_state_count(std::size_t n);
std::size_t full_state_index(bool stored_first_bit, const BitString& current);
StateClass full_state_class(std::size_t n, std::size_t index);

/// Row-stochastic one-generation kernel. Requires 2 <= n <= 10.
template <class Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> full_kernel(std::size_t n, MutationKind kind,
                                                                  const ChainOptions& options = {});

/// Absorption probabilities by dense LU over the transient states.
template <class Scalar = double>
AbsorptionResult<Scalar> markov_full_absorption(std::size_t n, MutationKind kind,
                                                 const ChainOptions& options = {});

// ---------------------------------------------------------------------------
// Lumped chain over (b, x_1, k), k = ones among positions 2..n: 4n states.
// Exact because fitness and both mutations are symmetric in positions 2..n.

struct LumpedState {
    bool stored_first_bit;
    bool first_bit;
    std::size_t ones_after_first;
};

std::size_t lumped_state_count(std::size_t n);
std::size_t lumped_state_index(std::size_t n, const LumpedState& s);
LumpedState lumped_state(std::size_t n, std::size_t index);
StateClass lumped_state_class(std::size_t n, const LumpedState& s);

/// Row-stochastic kernel. Requires 2 <= n <= 1000.
template <class Scalar = double>
Eigen::SparseMatrix<Scalar, Eigen::RowMajor> lumped_kernel(std::size_t n, MutationKind kind,
                                                           const ChainOptions& options = {});

/// Distribution of the initial lumped state under uniform x^0, x^1.
template <class Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> lumped_uniform_start(std::size_t n);

/// Absorption probabilities by sparse LU over the transient lumps.
template <class Scalar = double>
AbsorptionResult<Scalar> markov_lumped_absorption(std::size_t n, MutationKind kind,
                                                  const ChainOptions& options = {});

}  // namespace tlea::oracle

#endif  // TLEA_ORACLE_MARKOV_HPP
