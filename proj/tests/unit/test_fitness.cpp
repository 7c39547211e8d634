#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "tlea/fitness.hpp"
#include "tlea/mutation.hpp"
#include "tlea/random.hpp"

using namespace tlea;

namespace {

BitString bits(const char* s) {
    return BitString::from_string(s);
}

// Direct transcription of the discounted sum, kept apart from the library.
double residual_by_sum(const std::vector<BitString>& h) {
    const int t = static_cast<int>(h.size()) - 1;
    double r = 0;
    for (int tau = 2; tau <= t; ++tau) {
        r += std::exp(static_cast<double>(-t + tau - 1)) * (h[static_cast<std::size_t>(tau - 2)].first() ? 1.0 : 0.0);
    }
    return r;
}

}  // namespace

TEST_CASE("onemax01 values") {
    const int n = 8;
    CHECK(onemax01(false, BitString(n, true)) == n);
    CHECK(onemax01(true, BitString(n, true)) == 0);
    CHECK(onemax01(true, BitString(n)) == -n);
    CHECK(onemax01(TimePair{false, bits("0101")}) == 2);
    CHECK(onemax01(TimePair{true, bits("0101")}) == -2);
}

TEST_CASE("optimum is exactly (0, all ones)") {
    CHECK(is_optimum(TimePair{false, bits("1111")}));
    CHECK_FALSE(is_optimum(TimePair{true, bits("1111")}));
    CHECK_FALSE(is_optimum(TimePair{false, bits("1110")}));
}

TEST_CASE("fitness range and optimum equivalence on random pairs") {
    RandomStream rng(3, 0);
    for (int i = 0; i < 100000; ++i) {
        const std::size_t n = 2 + rng.index(9);
        const TimePair p{rng.coin(), uniform_random_bitstring(n, rng)};
        const int f = onemax01(p);
        const int nn = static_cast<int>(n);
        REQUIRE(f >= -nn);
        REQUIRE(f <= nn);
        REQUIRE((f == nn) == is_optimum(p));
    }
}

TEST_CASE("windowed interface reproduces onemax01") {
    RandomStream rng(4, 0);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t n = 1 + rng.index(40);
        const OneMax01Function f(n);
        CHECK(f.window() == 1);
        const std::vector<BitString> sols{uniform_random_bitstring(n, rng), uniform_random_bitstring(n, rng)};
        REQUIRE(f.evaluate(sols) == static_cast<double>(onemax01(sols[0].first(), sols[1])));
    }
    const OneMax01Function f(3);
    const std::vector<BitString> wrong_count{bits("111")};
    CHECK_THROWS(f.evaluate(wrong_count));
    const std::vector<BitString> wrong_size{bits("111"), bits("11")};
    CHECK_THROWS(f.evaluate(wrong_size));
}

TEST_CASE("online objective examples") {
    const std::size_t n = 5;
    SUBCASE("needs t >= 2") {
        OnlineHistory h({BitString(n), BitString(n)});
        CHECK(h.time() == 1);
        CHECK_THROWS(online_objective(h));
    }
    SUBCASE("zero history then all ones") {
        OnlineHistory h({BitString(n), BitString(n), BitString(n), BitString(n, true)});
        CHECK(online_residual(h) == 0.0);
        CHECK(online_objective(h) == doctest::Approx(5.0));
    }
    SUBCASE("t = 2 direct substitution") {
        OnlineHistory h({BitString(n), BitString(n), BitString(n, true)});
        CHECK(online_objective(h) == doctest::Approx(5.0));
    }
    SUBCASE("all first bits set approach 1/(e-1)") {
        std::vector<BitString> sols(60, BitString(n, true));
        OnlineHistory h(sols);
        const double bound = 1.0 / (std::numbers::e - 1.0);
        CHECK(online_residual(h) <= bound);
        CHECK(online_residual(h) == doctest::Approx(bound).epsilon(1e-12));
        // last two steps are (1, 1^n): component 0
        CHECK(online_objective(h) == doctest::Approx(bound).epsilon(1e-12));
    }
    SUBCASE("mixed dimensions rejected") {
        OnlineHistory h;
        h.push(BitString(n));
        CHECK_THROWS(h.push(BitString(n + 1)));
    }
}

TEST_CASE("incremental residual equals the direct sum") {
    RandomStream rng(6, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.index(6);
        std::vector<BitString> sols{uniform_random_bitstring(n, rng), uniform_random_bitstring(n, rng)};
        OnlineResidual inc;
        for (int t = 2; t < 40; ++t) {
            sols.push_back(uniform_random_bitstring(n, rng));
            inc.advance(sols[sols.size() - 3].first());
            const OnlineHistory h(sols);
            const double direct = residual_by_sum(sols);
            REQUIRE(online_residual(h) == doctest::Approx(direct).epsilon(1e-12));
            REQUIRE(inc.value() == doctest::Approx(direct).epsilon(1e-12));
            REQUIRE(direct >= 0.0);
            REQUIRE(direct <= 1.0 / (std::numbers::e - 1.0));
            const double comp = onemax01(sols[sols.size() - 2].first(), sols.back());
            REQUIRE(online_objective(h) - comp == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}
