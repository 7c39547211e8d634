#ifndef TLEA_ALGORITHMS_HPP
#define TLEA_ALGORITHMS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "tlea/fitness.hpp"
#include "tlea/mutation.hpp"
#include "tlea/population.hpp"
#include "tlea/random.hpp"

namespace tlea {

enum class OutcomeKind { OptimumFound, StagnatedEventI, StagnatedEventII, BudgetExhausted };

std::string_view to_string(OutcomeKind kind) noexcept;

/// Terminal classification of one run. `generation` counts completed
/// mutation/selection steps; 0 means the initial state already decided it.
struct TrialOutcome {
    OutcomeKind kind;
    std::uint64_t generation;

    friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

struct RunOptions {
    std::uint64_t budget;
    /// Stop as soon as a stagnation event is detected. When false the run
    /// continues to the budget and reports the first event seen.
    bool early_exit = true;
};

/// Outcome plus the extra bookkeeping needed for the no-early-exit checks.
struct TrialRecord {
    TrialOutcome outcome;
    /// Set if an optimum appeared after a stagnation event had been seen.
    bool optimum_after_stagnation = false;
};

// ---------------------------------------------------------------------------
// Single individual: RLS (one-bit) and (1+1) EA (bitwise)

struct Alg1State {
    TimePair pair;
    std::uint64_t generation = 0;
    MutationKind mutation = MutationKind::Bitwise;
};

/// 100 n^2 generations.
std::uint64_t default_alg1_budget(std::size_t n);

/// Draws X^0 and X^1 uniformly; the pair is (X^0_1, X^1). Requires n >= 2.
Alg1State alg1_init(std::size_t n, MutationKind kind, RandomStream& rng);

/// One generation in place. The offspring pair (X^g_1, offspring) replaces
/// the incumbent unless the incumbent is strictly fitter. Returns whether the
/// offspring was accepted.
bool alg1_advance(Alg1State& state, RandomStream& rng);

/// Value form of alg1_advance.
Alg1State alg1_step(Alg1State state, RandomStream& rng);

TrialRecord run_alg1_from(Alg1State state, const RunOptions& options, RandomStream& rng);

TrialOutcome run_alg1(std::size_t n, MutationKind kind, std::uint64_t budget, RandomStream& rng,
                      bool early_exit = true);

// ---------------------------------------------------------------------------
// (mu+1) EA

/// 100 mu n generations.
std::uint64_t default_alg2_budget(std::size_t n, std::size_t mu);

/// Draws 2 mu strings uniformly; slot i is (X_i^0 first bit, X_i^1).
Population alg2_init(std::size_t n, std::size_t mu, RandomStream& rng);

struct Alg2StepResult {
    bool accepted = false;
    /// The offspring pair was the optimum (checked at creation).
    bool optimum = false;
};

/// One generation in place: uniform parent, bitwise offspring, and if the
/// offspring pair is at least the population minimum it joins while one
/// uniformly chosen minimal pair of the mu+1 candidates leaves.
Alg2StepResult alg2_advance(Population& pop, RandomStream& rng);

/// Value form of alg2_advance. Copies the population; prefer alg2_advance in loops.
Population alg2_step(Population pop, RandomStream& rng);

TrialRecord run_alg2_from(Population pop, const RunOptions& options, RandomStream& rng);

TrialOutcome run_alg2(std::size_t n, std::size_t mu, std::uint64_t budget, RandomStream& rng,
                      bool early_exit = true);

}  // namespace tlea

#endif  // TLEA_ALGORITHMS_HPP
