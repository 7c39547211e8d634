#ifndef TLEA_MUTATION_HPP
#define TLEA_MUTATION_HPP

#include <cstddef>
#include <string_view>

#include "tlea/bitstring.hpp"
#include "tlea/random.hpp"

namespace tlea {

enum class MutationKind {
    OneBit,   ///< flip exactly one uniformly chosen position (RLS)
    Bitwise,  ///< flip each position independently with rate 1/n ((1+1) EA)
};

std::string_view to_string(MutationKind kind) noexcept;

/// Each bit independently 0 or 1 with probability 1/2. Rejects n = 0.
BitString uniform_random_bitstring(std::size_t n, RandomStream& rng);

BitString one_bit_mutation(const BitString& x, RandomStream& rng);

/// Standard bit mutation with rate 1/n.
BitString bitwise_mutation(const BitString& x, RandomStream& rng);

/// Standard bit mutation with an explicit rate in (0, 1].
BitString bitwise_mutation(const BitString& x, double rate, RandomStream& rng);

BitString mutate(const BitString& x, MutationKind kind, RandomStream& rng);

}  // namespace tlea

#endif  // TLEA_MUTATION_HPP
