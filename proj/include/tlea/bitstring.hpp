#ifndef TLEA_BITSTRING_HPP
#define TLEA_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tlea {

/// Fixed-length binary vector stored as packed 64-bit words.
///
/// Position 0 is the "first bit" of the search point. The ones-count is kept
/// up to date by every mutator so fitness lookups are O(1). Text form lists
/// positions left to right, so "1000" has only the first bit set.
class BitString {
public:
    explicit BitString(std::size_t n, bool value = false);

    static BitString from_string(std::string_view text);

    std::size_t size() const noexcept { return n_; }
    std::size_t ones() const noexcept { return ones_; }
    std::size_t zeros() const noexcept { return n_ - ones_; }
    bool all_ones() const noexcept { return ones_ == n_; }

    bool test(std::size_t i) const noexcept {
        return ((words_[i >> 6] >> (i & 63)) & 1ULL) != 0;
    }
    bool operator[](std::size_t i) const noexcept { return test(i); }
    bool first() const noexcept { return (words_[0] & 1ULL) != 0; }

    /// Ones among positions 1..n-1 (everything but the first bit).
    std::size_t ones_after_first() const noexcept { return ones_ - (first() ? 1 : 0); }

    void flip(std::size_t i) noexcept {
        const std::uint64_t mask = 1ULL << (i & 63);
        std::uint64_t& w = words_[i >> 6];
        w ^= mask;
        if ((w & mask) != 0) {
            ++ones_;
        } else {
            --ones_;
        }
    }

    void set(std::size_t i, bool value) noexcept {
        if (test(i) != value) {
            flip(i);
        }
    }

    /// Replaces the contents with raw words; bits past size() are ignored.
    void assign_words(std::span<const std::uint64_t> words);

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitString& a, const BitString& b) noexcept {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void recount() noexcept;

    std::size_t n_;
    std::size_t ones_;
    std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace tlea

#endif  // TLEA_BITSTRING_HPP
