#include "tlea/harness/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "tlea/detection.hpp"
#include "tlea/online.hpp"
#include "tlea/oracle/bounds.hpp"

namespace tlea::harness {

std::uint64_t trial_budget(Algorithm alg, std::size_t n, std::size_t mu, double multiplier) {
    const std::uint64_t base = alg == Algorithm::MuEA ? default_alg2_budget(n, mu) : default_alg1_budget(n);
    const double scaled = std::ceil(static_cast<double>(base) * multiplier);
    return scaled < 1.0 ? 1 : static_cast<std::uint64_t>(scaled);
}

TrialOutcome run_trial(Algorithm alg, std::size_t n, std::size_t mu, std::uint64_t budget, bool early_exit,
                       RandomStream& rng) {
    switch (alg) {
    case Algorithm::RLS:
        return run_alg1(n, MutationKind::OneBit, budget, rng, early_exit);
    case Algorithm::OEA:
        return run_alg1(n, MutationKind::Bitwise, budget, rng, early_exit);
    case Algorithm::MuEA:
        return run_alg2(n, mu, budget, rng, early_exit);
    case Algorithm::Online: {
        const OnlineTrace trace = run_online(n, MutationKind::Bitwise, budget, budget, rng);
        OutcomeKind kind = OutcomeKind::BudgetExhausted;
        if (is_optimum(trace.final_pair)) {
            kind = OutcomeKind::OptimumFound;
        } else if (event_I(trace.final_pair)) {
            kind = OutcomeKind::StagnatedEventI;
        } else if (event_II(trace.final_pair)) {
            kind = OutcomeKind::StagnatedEventII;
        }
        return TrialOutcome{kind, trace.generations};
    }
    }
    throw std::invalid_argument("run_trial: unknown algorithm");
}

std::uint64_t point_seed(std::uint64_t master, Algorithm alg, std::size_t n, std::size_t mu) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ static_cast<std::uint64_t>(alg));
    h = mix64(h ^ static_cast<std::uint64_t>(n));
    return mix64(h ^ static_cast<std::uint64_t>(mu));
}

std::vector<TrialOutcome> run_indexed(std::size_t trials, unsigned threads,
                                      const std::function<TrialOutcome(std::size_t)>& job,
                                      std::vector<bool>* threw) {
    const TrialOutcome failed_outcome{OutcomeKind::BudgetExhausted, 0};
    std::vector<TrialOutcome> results(trials, failed_outcome);
    std::vector<char> errors(trials, 0);
    unsigned workers = threads != 0 ? threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(trials, 1)));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
            try {
                results[i] = job(i);
            } catch (const std::exception&) {
                errors[i] = 1;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (threw != nullptr) {
        threw->assign(errors.begin(), errors.end());
    }
    return results;
}

double theorem_bound_for(Algorithm alg, std::size_t n, std::size_t mu, double delta) {
    const double nn = static_cast<double>(n);
    if (alg == Algorithm::MuEA) {
        return oracle::theorem2_bound(nn, static_cast<double>(mu), delta).value;
    }
    return oracle::theorem1_bound(nn).value;
}

PointReport summarize(Algorithm alg, std::size_t n, std::size_t mu, std::uint64_t seed, std::uint64_t budget,
                      std::span<const TrialOutcome> outcomes, std::size_t failed, double delta) {
    PointReport p{};
    p.algorithm = alg;
    p.n = n;
    p.mu = mu;
    p.trials = outcomes.size();
    p.failed = failed;
    p.seed = seed;
    p.budget = budget;
    std::vector<double> gens;
    for (const auto& o : outcomes) {
        ++p.counts[static_cast<std::size_t>(o.kind)];
        if (o.kind == OutcomeKind::OptimumFound) {
            gens.push_back(static_cast<double>(o.generation));
        }
    }
    const std::size_t ok = p.count(OutcomeKind::OptimumFound);
    const std::size_t bad = p.count(OutcomeKind::StagnatedEventI) + p.count(OutcomeKind::StagnatedEventII);
    const double trials = static_cast<double>(p.trials);
    p.success_rate = static_cast<double>(ok) / trials;
    p.failure_rate = static_cast<double>(bad) / trials;
    p.success95 = wilson_interval(ok, p.trials, 0.95);
    p.success99 = wilson_interval(ok, p.trials, 0.99);
    p.failure95 = wilson_interval(bad, p.trials, 0.95);
    p.failure99 = wilson_interval(bad, p.trials, 0.99);
    const Moments m = sample_moments(gens);
    p.cond_mean_gens = m.mean;
    p.cond_var_gens = m.variance;
    p.excluded_fraction = 1.0 - p.success_rate;
    p.theorem_bound = theorem_bound_for(alg, n, mu, delta);
    return p;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    validate(config);
    ExperimentReport report{config, {}};
    for (std::size_t n : config.n_values) {
        for (std::size_t mu : resolve_mu(config, n)) {
            const Algorithm alg = config.algorithm;
            const std::uint64_t seed = point_seed(config.seed, alg, n, mu);
            const std::uint64_t budget = trial_budget(alg, n, mu, config.budget_multiplier);
            const bool early_exit = config.early_exit;

            const auto start = std::chrono::steady_clock::now();
            std::vector<bool> threw;
            const auto outcomes = run_indexed(
                config.trials, config.threads,
                [&](std::size_t i) {
                    RandomStream rng(seed, i);
                    return run_trial(alg, n, mu, budget, early_exit, rng);
                },
                &threw);
            const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

            std::size_t failed = 0;
            for (bool t : threw) {
                failed += t ? 1 : 0;
            }
            PointReport p = summarize(alg, n, mu, config.seed, budget, outcomes, failed, config.mu.delta);
            p.wall_seconds_per_trial = elapsed / static_cast<double>(config.trials);
            report.points.push_back(p);
        }
    }
    return report;
}

}  // namespace tlea::harness
