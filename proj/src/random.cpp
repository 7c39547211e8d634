#include "tlea/random.hpp"

#include <array>
#include <stdexcept>

namespace tlea {

namespace {

RandomStream::Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
    const std::uint64_t a = mix64(seed);
    const std::uint64_t b = mix64(a ^ mix64(stream + 0x632be59bd9b4e019ULL));
    std::array<std::uint32_t, 8> material{};
    const std::array<std::uint64_t, 4> words{a, b, mix64(b), mix64(a + b)};
    for (std::size_t i = 0; i < words.size(); ++i) {
        material[2 * i] = static_cast<std::uint32_t>(words[i]);
        material[2 * i + 1] = static_cast<std::uint32_t>(words[i] >> 32);
    }
    std::seed_seq seq(material.begin(), material.end());
    return RandomStream::Engine(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index), engine_(make_engine(seed, stream_index)) {}

std::size_t RandomStream::index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("RandomStream::index: empty range");
    }
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(engine_);
}

double RandomStream::uniform() {
    // 53 random mantissa bits.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::geometric(double p) {
    if (!(p > 0.0) || p > 1.0) {
        throw std::invalid_argument("RandomStream::geometric: p must lie in (0, 1]");
    }
    if (p == 1.0) {
        return 0;
    }
    std::geometric_distribution<std::uint64_t> dist(p);
    return dist(engine_);
}

RandomStream RandomStream::derive(std::uint64_t salt) const {
    return RandomStream(mix64(seed_ ^ mix64(salt)), stream_);
}

}  // namespace tlea
