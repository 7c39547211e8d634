#ifndef TLEA_POPULATION_HPP
#define TLEA_POPULATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tlea/detection.hpp"
#include "tlea/fitness.hpp"
#include "tlea/random.hpp"

namespace tlea {

/// mu time pairs with an incrementally maintained census.
///
/// Slots are bucketed by fitness so the minimum, its multiplicity, and a
/// uniform draw among minimal slots are all O(1). Pattern and event counts
/// are updated on every replace(); verify() rescans everything.
class Population {
public:
    explicit Population(std::vector<TimePair> slots);

    std::size_t size() const noexcept { return slots_.size(); }
    std::size_t dimension() const noexcept { return n_; }

    const TimePair& slot(std::size_t i) const { return slots_.at(i); }
    std::span<const TimePair> slots() const noexcept { return slots_; }
    int fitness(std::size_t i) const { return fitness_.at(i); }

    int min_fitness() const noexcept { return min_; }
    std::size_t count_at_fitness(int f) const noexcept;

    std::size_t pattern_count(FirstBitPattern p) const noexcept { return patterns_[pattern_index(p)]; }
    std::size_t event_I_slots() const noexcept { return event_I_; }
    std::size_t event_II_slots() const noexcept { return event_II_; }
    std::size_t optimum_slots() const noexcept { return optimum_; }

    /// Uniformly chosen slot index among slots with fitness f (must exist).
    std::size_t uniform_slot_at_fitness(int f, RandomStream& rng) const;

    /// The k-th slot (in bucket order) with fitness f; k < count_at_fitness(f).
    std::size_t slot_at_fitness(int f, std::size_t k) const { return buckets_.at(bucket_of(f)).at(k); }

    void replace(std::size_t i, TimePair pair);

    std::uint64_t generation = 0;

    /// Full rescan; throws std::logic_error if the cached census disagrees.
    void verify() const;

private:
    std::size_t bucket_of(int f) const noexcept { return static_cast<std::size_t>(f + static_cast<int>(n_)); }
    void add_to_census(std::size_t i);
    void remove_from_census(std::size_t i);

    std::size_t n_;
    std::vector<TimePair> slots_;
    std::vector<int> fitness_;
    std::vector<std::vector<std::size_t>> buckets_;
    std::vector<std::size_t> bucket_pos_;
    int min_;
    std::array<std::size_t, 4> patterns_{};
    std::size_t event_I_ = 0;
    std::size_t event_II_ = 0;
    std::size_t optimum_ = 0;
};

}  // namespace tlea

#endif  // TLEA_POPULATION_HPP
