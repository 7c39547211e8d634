#include <doctest.h>

#include <numeric>
#include <vector>

#include "tlea/detection.hpp"
#include "tlea/mutation.hpp"
#include "tlea/population.hpp"

using namespace tlea;

namespace {

TimePair tp(bool prev, const char* s) {
    return TimePair{prev, BitString::from_string(s)};
}

}  // namespace

TEST_CASE("pattern classification") {
    CHECK(classify(tp(false, "1000")) == FirstBitPattern::P01);
    CHECK(classify(tp(true, "0000")) == FirstBitPattern::P10);
    CHECK(classify(tp(false, "0111")) == FirstBitPattern::P00);
    CHECK(classify(tp(true, "1000")) == FirstBitPattern::P11);
    CHECK(to_string(FirstBitPattern::P01) == "(0,1)");
}

TEST_CASE("single pair events") {
    CHECK_FALSE(event_I(tp(false, "1111")));
    CHECK(event_I(tp(false, "1011")));
    CHECK_FALSE(event_I(tp(true, "1000")));
    CHECK(event_II(tp(true, "1111")));
    CHECK_FALSE(event_II(tp(false, "1111")));
    CHECK_FALSE(event_II(tp(true, "1110")));
}

TEST_CASE("events are exclusive and exclude the optimum") {
    RandomStream rng(1, 1);
    for (int i = 0; i < 20000; ++i) {
        const std::size_t n = 2 + rng.index(4);
        TimePair p{rng.coin(), uniform_random_bitstring(n, rng)};
        REQUIRE_FALSE((event_I(p) && event_II(p)));
        if (is_optimum(p)) {
            REQUIRE_FALSE(event_I(p));
            REQUIRE_FALSE(event_II(p));
        }
    }
}

TEST_CASE("population events") {
    Population all_I({tp(false, "1010"), tp(false, "1000"), tp(false, "1110")});
    CHECK(event_I_prime(all_I));
    CHECK_FALSE(event_II_prime(all_I));
    CHECK(all_I.min_fitness() >= 1);

    Population one_00({tp(false, "1010"), tp(false, "0000")});
    CHECK_FALSE(event_I_prime(one_00));

    Population all_II({tp(true, "111"), tp(true, "111")});
    CHECK(event_II_prime(all_II));
    for (std::size_t i = 0; i < all_II.size(); ++i) {
        CHECK(all_II.fitness(i) == 0);
    }

    Population with_opt({tp(true, "111"), tp(false, "111")});
    CHECK_FALSE(event_II_prime(with_opt));

    Population mixed({tp(true, "111"), tp(false, "101")});
    CHECK_FALSE(event_I_prime(mixed));
    CHECK_FALSE(event_II_prime(mixed));
    CHECK(all_parents_stuck(mixed));
    CHECK_FALSE(all_parents_stuck(with_opt));

    for (const TimePair& p : {tp(false, "1010"), tp(true, "1111"), tp(false, "0111")}) {
        Population single({p});
        CHECK(event_I_prime(single) == event_I(p));
        CHECK(event_II_prime(single) == event_II(p));
    }
}

TEST_CASE("census of a single (0,0) slot") {
    Population pop({tp(false, "01111110")});
    const PopulationCensus c = population_census(pop);
    REQUIRE(c.best00_fitness);
    CHECK(*c.best00_fitness == 6);
    CHECK(*c.front_zeros == 2);
    CHECK(c.zero_offset_histogram.at(0) == 1);
    CHECK(c.current_front == 1);
    CHECK(c.classes_defined);

    // n - 1 ones with the first bit clear: one zero at the front.
    Population single({tp(false, "01111")});
    const auto s = population_census(single);
    REQUIRE(s.best00_fitness);
    CHECK(*s.best00_fitness == 4);
    CHECK(*s.front_zeros == 1);
    CHECK(s.zero_offset_histogram.at(0) == 1);
    CHECK(s.current_front == 1);
}

TEST_CASE("census without (0,0) slots") {
    Population pop({tp(false, "1000"), tp(true, "1111"), tp(true, "0110")});
    const PopulationCensus c = population_census(pop);
    CHECK_FALSE(c.best00_fitness);
    CHECK_FALSE(c.classes_defined);
    CHECK(std::accumulate(c.patterns.begin(), c.patterns.end(), std::size_t{0}) == 3);
}

TEST_CASE("census classes partition random populations") {
    RandomStream rng(2, 2);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 3 + rng.index(8);
        const std::size_t mu = 1 + rng.index(12);
        std::vector<TimePair> slots;
        for (std::size_t i = 0; i < mu; ++i) {
            slots.push_back(TimePair{rng.coin(), uniform_random_bitstring(n, rng)});
        }
        Population pop(slots);
        const auto c = population_census(pop);
        REQUIRE(std::accumulate(c.patterns.begin(), c.patterns.end(), std::size_t{0}) == mu);

        // Independent recount from the definitions.
        std::optional<int> best;
        for (const auto& s : slots) {
            if (!s.prev_first_bit && !s.current.first()) {
                const int f = onemax01(s);
                best = best ? std::max(*best, f) : f;
            }
        }
        REQUIRE(best.has_value() == c.best00_fitness.has_value());
        if (!best) {
            continue;
        }
        std::size_t tu = 0;
        std::size_t front = 0;
        for (const auto& s : slots) {
            const int f = onemax01(s);
            if (!s.prev_first_bit && s.current.first() && f > *best) {
                ++tu;
            }
            if (!s.prev_first_bit && !s.current.first() && f == *best) {
                ++front;
            }
        }
        REQUIRE(c.temporarily_undefeated == tu);
        REQUIRE(c.current_front == front);
        REQUIRE(c.temporarily_undefeated + c.current_front + c.interior == mu);
        REQUIRE(std::accumulate(c.zero_offset_histogram.begin(), c.zero_offset_histogram.end(), std::size_t{0}) ==
                c.patterns[pattern_index(FirstBitPattern::P00)]);
    }
}

TEST_CASE("population census stays consistent under replacement") {
    RandomStream rng(3, 3);
    std::vector<TimePair> slots;
    for (int i = 0; i < 30; ++i) {
        slots.push_back(TimePair{rng.coin(), uniform_random_bitstring(6, rng)});
    }
    Population pop(slots);
    for (int step = 0; step < 5000; ++step) {
        pop.replace(rng.index(pop.size()), TimePair{rng.coin(), uniform_random_bitstring(6, rng)});
        if (step % 50 == 0) {
            REQUIRE_NOTHROW(pop.verify());
        }
        int lo = 100;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            lo = std::min(lo, onemax01(pop.slot(i)));
        }
        REQUIRE(pop.min_fitness() == lo);
    }
}
