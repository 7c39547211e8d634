#ifndef TLEA_HARNESS_EXPERIMENT_HPP
#define TLEA_HARNESS_EXPERIMENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "tlea/algorithms.hpp"
#include "tlea/harness/config.hpp"
#include "tlea/harness/stats.hpp"
#include "tlea/random.hpp"

namespace tlea::harness {

/// Aggregated statistics for one (algorithm, n, mu) point.
struct PointReport {
    Algorithm algorithm;
    std::size_t n;
    std::size_t mu;
    std::size_t trials;
    /// Indexed by OutcomeKind. Trials that threw are counted under
    /// BudgetExhausted and also in `failed`.
    std::array<std::size_t, 4> counts{};
    std::size_t failed = 0;
    double success_rate;
    double failure_rate;  ///< event I plus event II
    Interval success95;
    Interval success99;
    Interval failure95;
    Interval failure99;
    /// Over OptimumFound trials only.
    double cond_mean_gens;
    double cond_var_gens;
    double excluded_fraction;  ///< share of trials outside the conditioning
    double theorem_bound;
    std::uint64_t seed;
    std::uint64_t budget;
    double wall_seconds_per_trial;

    std::size_t count(OutcomeKind k) const { return counts[static_cast<std::size_t>(k)]; }
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<PointReport> points;
};

/// Generation budget for one trial of `alg` at (n, mu).
std::uint64_t trial_budget(Algorithm alg, std::size_t n, std::size_t mu, double multiplier);

/// One trial. Online trials run with a time horizon and a per-step stall
/// budget both equal to `budget`, and are classified by their final pair.
TrialOutcome run_trial(Algorithm alg, std::size_t n, std::size_t mu, std::uint64_t budget, bool early_exit,
                       RandomStream& rng);

/// Seed of the streams used at one point; trial i uses stream index i.
std::uint64_t point_seed(std::uint64_t master, Algorithm alg, std::size_t n, std::size_t mu);

/// Runs `trials` jobs on `threads` workers (0 = hardware concurrency);
/// job(i) must depend on i only. Results are returned in index order.
std::vector<TrialOutcome> run_indexed(std::size_t trials, unsigned threads,
                                      const std::function<TrialOutcome(std::size_t)>& job,
                                      std::vector<bool>* threw = nullptr);

/// Builds one point's statistics from per-trial outcomes.
PointReport summarize(Algorithm alg, std::size_t n, std::size_t mu, std::uint64_t seed, std::uint64_t budget,
                      std::span<const TrialOutcome> outcomes, std::size_t failed, double delta);

/// Validates `config` (throws ConfigError) and runs every point.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Value printed in the theorem_bound column: the single individual failure
/// bound for RLS/OEA/Online, the population success bound for MuEA.
double theorem_bound_for(Algorithm alg, std::size_t n, std::size_t mu, double delta);

}  // namespace tlea::harness

#endif  // TLEA_HARNESS_EXPERIMENT_HPP
