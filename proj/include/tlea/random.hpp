#ifndef TLEA_RANDOM_HPP
#define TLEA_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace tlea {

/// SplitMix64 finalizer. Used to turn (seed, stream) pairs into well-spread
/// engine seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random source addressed by (seed, stream index).
///
/// Two streams built from the same pair produce the same draw sequence no
/// matter which thread owns them. Distinct stream indices under one seed are
/// decorrelated by hashing the pair into the engine's seed sequence.
class RandomStream {
public:
    using Engine = std::mt19937_64;

    RandomStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_index() const noexcept { return stream_; }

    Engine& engine() noexcept { return engine_; }

    std::uint64_t word() { return engine_(); }
    bool coin() { return (engine_() >> 63) != 0; }

    /// Uniform integer in [0, n). Requires n >= 1.
    std::size_t index(std::size_t n);

    /// Uniform real in [0, 1).
    double uniform();

    /// Failures before the first success of a Bernoulli(p) sequence.
    std::uint64_t geometric(double p);

    /// Independent child stream; `salt` distinguishes siblings.
    RandomStream derive(std::uint64_t salt) const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    Engine engine_;
};

}  // namespace tlea

#endif  // TLEA_RANDOM_HPP
