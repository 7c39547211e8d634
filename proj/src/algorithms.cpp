#include "tlea/algorithms.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tlea/detection.hpp"

namespace tlea {

std::string_view to_string(OutcomeKind kind) noexcept {
    switch (kind) {
    case OutcomeKind::OptimumFound:
        return "optimum";
    case OutcomeKind::StagnatedEventI:
        return "event-I";
    case OutcomeKind::StagnatedEventII:
        return "event-II";
    case OutcomeKind::BudgetExhausted:
        return "budget";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

std::uint64_t default_alg1_budget(std::size_t n) {
    return 100ULL * n * n;
}

Alg1State alg1_init(std::size_t n, MutationKind kind, RandomStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("alg1_init: n must be at least 2");
    }
    BitString x0 = uniform_random_bitstring(n, rng);
    BitString x1 = uniform_random_bitstring(n, rng);
    return Alg1State{TimePair{x0.first(), std::move(x1)}, 0, kind};
}

bool alg1_advance(Alg1State& state, RandomStream& rng) {
    ++state.generation;
    BitString offspring = mutate(state.pair.current, state.mutation, rng);
    const bool parent_first = state.pair.current.first();
    if (onemax01(state.pair) > onemax01(parent_first, offspring)) {
        return false;
    }
    state.pair = TimePair{parent_first, std::move(offspring)};
    return true;
}

Alg1State alg1_step(Alg1State state, RandomStream& rng) {
    alg1_advance(state, rng);
    return state;
}

TrialRecord run_alg1_from(Alg1State state, const RunOptions& options, RandomStream& rng) {
    TrialRecord record{{OutcomeKind::BudgetExhausted, 0}, false};
    std::optional<TrialOutcome> first_event;
    const std::uint64_t stop = state.generation + options.budget;

    // Returns true when the run is over.
    auto inspect = [&]() {
        const TimePair& p = state.pair;
        if (is_optimum(p)) {
            record.optimum_after_stagnation = first_event.has_value();
            record.outcome = {OutcomeKind::OptimumFound, state.generation};
            return true;
        }
        if (!first_event) {
            if (event_I(p)) {
                first_event = TrialOutcome{OutcomeKind::StagnatedEventI, state.generation};
            } else if (event_II(p)) {
                first_event = TrialOutcome{OutcomeKind::StagnatedEventII, state.generation};
            }
            if (first_event && options.early_exit) {
                record.outcome = *first_event;
                return true;
            }
        }
        return false;
    };

    if (inspect()) {
        return record;
    }
    while (state.generation < stop) {
        alg1_advance(state, rng);
        if (inspect()) {
            return record;
        }
    }
    record.outcome = first_event ? *first_event : TrialOutcome{OutcomeKind::BudgetExhausted, stop};
    return record;
}

TrialOutcome run_alg1(std::size_t n, MutationKind kind, std::uint64_t budget, RandomStream& rng,
                      bool early_exit) {
    if (budget < 1) {
        throw std::invalid_argument("run_alg1: budget must be at least 1");
    }
    Alg1State state = alg1_init(n, kind, rng);
    return run_alg1_from(std::move(state), RunOptions{budget, early_exit}, rng).outcome;
}

// ---------------------------------------------------------------------------

std::uint64_t default_alg2_budget(std::size_t n, std::size_t mu) {
    return 100ULL * mu * n;
}

Population alg2_init(std::size_t n, std::size_t mu, RandomStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("alg2_init: n must be at least 2");
    }
    if (mu < 1) {
        throw std::invalid_argument("alg2_init: mu must be at least 1");
    }
    std::vector<BitString> previous;
    previous.reserve(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        previous.push_back(uniform_random_bitstring(n, rng));
    }
    std::vector<TimePair> slots;
    slots.reserve(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        slots.push_back(TimePair{previous[i].first(), uniform_random_bitstring(n, rng)});
    }
    return Population(std::move(slots));
}

Alg2StepResult alg2_advance(Population& pop, RandomStream& rng) {
    Alg2StepResult result;
    ++pop.generation;
    const TimePair& parent = pop.slot(rng.index(pop.size()));
    TimePair candidate{parent.current.first(), bitwise_mutation(parent.current, rng)};
    result.optimum = is_optimum(candidate);

    const int fc = onemax01(candidate);
    const int lowest = pop.min_fitness();
    if (fc < lowest) {
        return result;
    }
    // Lowest fitness among the mu+1 candidates is `lowest`; the offspring is
    // one of those only on a tie.
    const std::size_t ties = pop.count_at_fitness(lowest);
    std::size_t victim = 0;
    if (fc > lowest) {
        victim = pop.slot_at_fitness(lowest, rng.index(ties));
    } else {
        const std::size_t pick = rng.index(ties + 1);
        if (pick == ties) {
            return result;
        }
        victim = pop.slot_at_fitness(lowest, pick);
    }
    pop.replace(victim, std::move(candidate));
    result.accepted = true;
    return result;
}

Population alg2_step(Population pop, RandomStream& rng) {
    alg2_advance(pop, rng);
    return pop;
}

TrialRecord run_alg2_from(Population pop, const RunOptions& options, RandomStream& rng) {
    TrialRecord record{{OutcomeKind::BudgetExhausted, 0}, false};
    std::optional<TrialOutcome> first_event;
    const std::uint64_t stop = pop.generation + options.budget;

    auto inspect = [&](bool optimum_created) {
        if (optimum_created) {
            record.optimum_after_stagnation = first_event.has_value();
            record.outcome = {OutcomeKind::OptimumFound, pop.generation};
            return true;
        }
        if (!first_event) {
            if (event_I_prime(pop)) {
                first_event = TrialOutcome{OutcomeKind::StagnatedEventI, pop.generation};
            } else if (event_II_prime(pop)) {
                first_event = TrialOutcome{OutcomeKind::StagnatedEventII, pop.generation};
            }
            if (first_event && options.early_exit) {
                record.outcome = *first_event;
                return true;
            }
        }
        // Mixed event-I / event-II populations are absorbing too: every parent
        // has first bit 1, so no offspring pair can ever score above 0. The
        // budget would be spent without change, so report that directly.
        if (options.early_exit && !first_event && all_parents_stuck(pop)) {
            record.outcome = {OutcomeKind::BudgetExhausted, stop};
            return true;
        }
        return false;
    };

    if (inspect(pop.optimum_slots() > 0)) {
        return record;
    }
    while (pop.generation < stop) {
        const Alg2StepResult step = alg2_advance(pop, rng);
        if (inspect(step.optimum)) {
            return record;
        }
    }
    record.outcome = first_event ? *first_event : TrialOutcome{OutcomeKind::BudgetExhausted, stop};
    return record;
}

TrialOutcome run_alg2(std::size_t n, std::size_t mu, std::uint64_t budget, RandomStream& rng,
                      bool early_exit) {
    Population pop = alg2_init(n, mu, rng);
    return run_alg2_from(std::move(pop), RunOptions{budget, early_exit}, rng).outcome;
}

}  // namespace tlea
