#include "tlea/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tlea {

namespace {

constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

std::uint64_t tail_mask(std::size_t n) {
    const std::size_t r = n & 63;
    return r == 0 ? ~0ULL : ((1ULL << r) - 1);
}

}  // namespace

BitString::BitString(std::size_t n, bool value)
    : n_(n), ones_(0), words_(word_count(n), value ? ~0ULL : 0ULL) {
    if (n == 0) {
        throw std::invalid_argument("BitString: dimension must be at least 1");
    }
    words_.back() &= tail_mask(n_);
    ones_ = value ? n_ : 0;
}

BitString BitString::from_string(std::string_view text) {
    BitString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '0':
            break;
        case '1':
            out.flip(i);
            break;
        default:
            throw std::invalid_argument("BitString::from_string: expected only '0' and '1'");
        }
    }
    return out;
}

void BitString::assign_words(std::span<const std::uint64_t> words) {
    if (words.size() < words_.size()) {
        throw std::invalid_argument("BitString::assign_words: not enough words");
    }
    std::copy_n(words.begin(), words_.size(), words_.begin());
    words_.back() &= tail_mask(n_);
    recount();
}

void BitString::recount() noexcept {
    std::size_t c = 0;
    for (std::uint64_t w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    ones_ = c;
}

std::string BitString::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (test(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming_distance: dimension mismatch");
    }
    std::size_t d = 0;
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    }
    return d;
}

}  // namespace tlea
