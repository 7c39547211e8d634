#include "tlea/mutation.hpp"

#include <stdexcept>
#include <vector>

namespace tlea {

std::string_view to_string(MutationKind kind) noexcept {
    switch (kind) {
    case MutationKind::OneBit:
        return "one-bit";
    case MutationKind::Bitwise:
        return "bitwise";
    }
    return "unknown";
}

BitString uniform_random_bitstring(std::size_t n, RandomStream& rng) {
    if (n == 0) {
        throw std::invalid_argument("uniform_random_bitstring: dimension must be at least 1");
    }
    BitString x(n);
    std::vector<std::uint64_t> words((n + 63) / 64);
    for (auto& w : words) {
        w = rng.word();
    }
    x.assign_words(words);
    return x;
}

BitString one_bit_mutation(const BitString& x, RandomStream& rng) {
    BitString y = x;
    y.flip(rng.index(x.size()));
    return y;
}

BitString bitwise_mutation(const BitString& x, RandomStream& rng) {
    return bitwise_mutation(x, 1.0 / static_cast<double>(x.size()), rng);
}

BitString bitwise_mutation(const BitString& x, double rate, RandomStream& rng) {
    if (!(rate > 0.0) || rate > 1.0) {
        throw std::invalid_argument("bitwise_mutation: rate must lie in (0, 1]");
    }
    // Gaps between flipped positions are geometric, so the cost is O(1 + flips).
    BitString y = x;
    const std::size_t n = x.size();
    std::size_t pos = 0;
    while (true) {
        const std::uint64_t gap = rng.geometric(rate);
        if (gap >= n - pos) {
            break;
        }
        pos += static_cast<std::size_t>(gap);
        y.flip(pos);
        ++pos;
        if (pos >= n) {
            break;
        }
    }
    return y;
}

BitString mutate(const BitString& x, MutationKind kind, RandomStream& rng) {
    return kind == MutationKind::OneBit ? one_bit_mutation(x, rng) : bitwise_mutation(x, rng);
}

}  // namespace tlea
