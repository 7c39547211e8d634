#ifndef TLEA_DETECTION_HPP
#define TLEA_DETECTION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tlea/fitness.hpp"

namespace tlea {

class Population;

/// (previous first bit, current first bit).
enum class FirstBitPattern : unsigned char { P00 = 0, P01 = 1, P10 = 2, P11 = 3 };

constexpr FirstBitPattern make_pattern(bool prev, bool cur) noexcept {
    return static_cast<FirstBitPattern>((prev ? 2 : 0) | (cur ? 1 : 0));
}

constexpr std::size_t pattern_index(FirstBitPattern p) noexcept {
    return static_cast<std::size_t>(p);
}

std::string_view to_string(FirstBitPattern p) noexcept;

inline FirstBitPattern classify(const TimePair& pair) noexcept {
    return make_pattern(pair.prev_first_bit, pair.current.first());
}

/// Pattern (0,1) with positions 2..n not all ones. Absorbing for the single
/// individual algorithm: every offspring pair carries a stored 1 and scores <= 0.
inline bool event_I(const TimePair& pair) noexcept {
    return !pair.prev_first_bit && pair.current.first() && !pair.current.all_ones();
}

/// Stored 1 with an all-ones current string. Absorbing: only an all-ones
/// offspring ties, and it reproduces the same pair.
inline bool event_II(const TimePair& pair) noexcept {
    return pair.prev_first_bit && pair.current.all_ones();
}

/// event_I holds in every slot.
bool event_I_prime(const Population& pop) noexcept;

/// event_II holds in every slot.
bool event_II_prime(const Population& pop) noexcept;

/// Every slot is in event_I or event_II. This is the exact absorbing set for
/// the population algorithm; it includes mixtures that neither primed event
/// covers.
bool all_parents_stuck(const Population& pop) noexcept;

struct PopulationCensus {
    std::array<std::size_t, 4> patterns{};  ///< indexed by pattern_index

    /// Best fitness over (0,0)-pattern slots; empty when there are none.
    std::optional<int> best00_fitness;
    /// Zero count of the current front individuals (n - best00_fitness).
    std::optional<std::size_t> front_zeros;
    /// zero_offset_histogram[d] = number of (0,0) slots with front_zeros + d zeros.
    std::vector<std::size_t> zero_offset_histogram;

    /// False when no (0,0) slot exists; the three class counts are then zero
    /// and must not be read as a partition.
    bool classes_defined = false;
    std::size_t temporarily_undefeated = 0;
    std::size_t current_front = 0;
    std::size_t interior = 0;
};

PopulationCensus population_census(const Population& pop);

}  // namespace tlea

#endif  // TLEA_DETECTION_HPP
