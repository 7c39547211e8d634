#include "tlea/detection.hpp"

#include <algorithm>

#include "tlea/population.hpp"

namespace tlea {

std::string_view to_string(FirstBitPattern p) noexcept {
    switch (p) {
    case FirstBitPattern::P00:
        return "(0,0)";
    case FirstBitPattern::P01:
        return "(0,1)";
    case FirstBitPattern::P10:
        return "(1,0)";
    case FirstBitPattern::P11:
        return "(1,1)";
    }
    return "?";
}

bool event_I_prime(const Population& pop) noexcept {
    return pop.event_I_slots() == pop.size();
}

bool event_II_prime(const Population& pop) noexcept {
    return pop.event_II_slots() == pop.size();
}

bool all_parents_stuck(const Population& pop) noexcept {
    return pop.event_I_slots() + pop.event_II_slots() == pop.size();
}

PopulationCensus population_census(const Population& pop) {
    PopulationCensus c;
    const int n = static_cast<int>(pop.dimension());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const FirstBitPattern p = classify(pop.slot(i));
        ++c.patterns[pattern_index(p)];
        if (p == FirstBitPattern::P00) {
            const int f = pop.fitness(i);
            c.best00_fitness = c.best00_fitness ? std::max(*c.best00_fitness, f) : f;
        }
    }
    if (!c.best00_fitness) {
        return c;
    }
    const int l = *c.best00_fitness;
    // A (0,0) slot's fitness is its ones-count, so zeros = n - fitness.
    const std::size_t a = static_cast<std::size_t>(n - l);
    c.front_zeros = a;
    c.zero_offset_histogram.assign(static_cast<std::size_t>(n) - a + 1, 0);
    c.classes_defined = true;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        const FirstBitPattern p = classify(pop.slot(i));
        const int f = pop.fitness(i);
        if (p == FirstBitPattern::P00) {
            ++c.zero_offset_histogram[static_cast<std::size_t>(l - f)];
        }
        if (p == FirstBitPattern::P01 && f > l) {
            ++c.temporarily_undefeated;
        } else if (p == FirstBitPattern::P00 && f == l) {
            ++c.current_front;
        } else {
            ++c.interior;
        }
    }
    return c;
}

}  // namespace tlea
