#include "tlea/population.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace tlea {

Population::Population(std::vector<TimePair> slots) : n_(0), slots_(std::move(slots)), min_(0) {
    if (slots_.empty()) {
        throw std::invalid_argument("Population: need at least one slot");
    }
    n_ = slots_.front().dimension();
    for (const auto& s : slots_) {
        if (s.dimension() != n_) {
            throw std::invalid_argument("Population: all slots must share one dimension");
        }
    }
    fitness_.assign(slots_.size(), 0);
    bucket_pos_.assign(slots_.size(), 0);
    buckets_.resize(2 * n_ + 1);
    min_ = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        add_to_census(i);
    }
}

std::size_t Population::count_at_fitness(int f) const noexcept {
    if (f < -static_cast<int>(n_) || f > static_cast<int>(n_)) {
        return 0;
    }
    return buckets_[bucket_of(f)].size();
}

std::size_t Population::uniform_slot_at_fitness(int f, RandomStream& rng) const {
    const auto& bucket = buckets_.at(bucket_of(f));
    if (bucket.empty()) {
        throw std::logic_error("Population::uniform_slot_at_fitness: no slot with that fitness");
    }
    return bucket[rng.index(bucket.size())];
}

void Population::add_to_census(std::size_t i) {
    const TimePair& s = slots_[i];
    const int f = onemax01(s);
    fitness_[i] = f;
    auto& bucket = buckets_[bucket_of(f)];
    bucket_pos_[i] = bucket.size();
    bucket.push_back(i);
    min_ = std::min(min_, f);
    ++patterns_[pattern_index(classify(s))];
    event_I_ += event_I(s) ? 1 : 0;
    event_II_ += event_II(s) ? 1 : 0;
    optimum_ += is_optimum(s) ? 1 : 0;
}

void Population::remove_from_census(std::size_t i) {
    const TimePair& s = slots_[i];
    const int f = fitness_[i];
    auto& bucket = buckets_[bucket_of(f)];
    const std::size_t pos = bucket_pos_[i];
    const std::size_t last = bucket.back();
    bucket[pos] = last;
    bucket_pos_[last] = pos;
    bucket.pop_back();
    --patterns_[pattern_index(classify(s))];
    event_I_ -= event_I(s) ? 1 : 0;
    event_II_ -= event_II(s) ? 1 : 0;
    optimum_ -= is_optimum(s) ? 1 : 0;
}

void Population::replace(std::size_t i, TimePair pair) {
    if (i >= slots_.size()) {
        throw std::out_of_range("Population::replace: slot index");
    }
    if (pair.dimension() != n_) {
        throw std::invalid_argument("Population::replace: dimension mismatch");
    }
    remove_from_census(i);
    slots_[i] = std::move(pair);
    add_to_census(i);
    while (buckets_[bucket_of(min_)].empty()) {
        ++min_;
    }
}

void Population::verify() const {
    std::array<std::size_t, 4> patterns{};
    std::size_t ev1 = 0;
    std::size_t ev2 = 0;
    std::size_t opt = 0;
    int mn = std::numeric_limits<int>::max();
    std::vector<std::size_t> per_bucket(buckets_.size(), 0);
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const TimePair& s = slots_[i];
        const int f = onemax01(s);
        if (f != fitness_[i]) {
            throw std::logic_error("Population::verify: stale fitness at slot " + std::to_string(i));
        }
        const auto& bucket = buckets_[bucket_of(f)];
        if (bucket_pos_[i] >= bucket.size() || bucket[bucket_pos_[i]] != i) {
            throw std::logic_error("Population::verify: bucket index broken at slot " + std::to_string(i));
        }
        ++per_bucket[bucket_of(f)];
        mn = std::min(mn, f);
        ++patterns[pattern_index(classify(s))];
        ev1 += event_I(s) ? 1 : 0;
        ev2 += event_II(s) ? 1 : 0;
        opt += is_optimum(s) ? 1 : 0;
    }
    for (std::size_t b = 0; b < buckets_.size(); ++b) {
        if (per_bucket[b] != buckets_[b].size()) {
            throw std::logic_error("Population::verify: bucket size mismatch");
        }
    }
    if (mn != min_ || patterns != patterns_ || ev1 != event_I_ || ev2 != event_II_ || opt != optimum_) {
        throw std::logic_error("Population::verify: cached census disagrees with rescan");
    }
}

}  // namespace tlea
