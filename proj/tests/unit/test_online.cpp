#include <doctest.h>

#include <vector>

#include "tlea/detection.hpp"
#include "tlea/online.hpp"

using namespace tlea;

TEST_CASE("online traces are consistent with the objective") {
    int goals = 0;
    int stalls = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        RandomStream rng(21, seed);
        const std::size_t n = 8;
        const OnlineTrace trace = run_online(n, MutationKind::Bitwise, 5000, 20000, rng);

        REQUIRE(trace.history.solutions().size() == trace.records.size() + 2);
        std::vector<BitString> prefix(trace.history.solutions().begin(), trace.history.solutions().begin() + 2);
        std::uint64_t last_gen = 0;
        for (const auto& rec : trace.records) {
            prefix.push_back(rec.pair.current);
            const OnlineHistory h(prefix);
            REQUIRE(h.time() == rec.time);
            REQUIRE(rec.objective == doctest::Approx(online_objective(h)).epsilon(1e-12));
            // time advances at most once per generation
            REQUIRE(rec.time - 1 <= rec.generation);
            REQUIRE(rec.generation > last_gen);
            last_gen = rec.generation;
        }
        if (trace.stop == OnlineStop::Goal) {
            ++goals;
            CHECK(is_optimum(trace.final_pair));
            if (!trace.records.empty()) {
                CHECK(trace.records.back().objective > static_cast<double>(n) - 1.0);
            }
        }
        if (trace.stop == OnlineStop::Stalled) {
            ++stalls;
            CHECK(event_I(trace.final_pair));
        }
        if (event_I(trace.final_pair)) {
            CHECK(trace.stop == OnlineStop::Stalled);
        }
    }
    CHECK(goals > 0);
    CHECK(stalls > 0);
}

TEST_CASE("online horizon and arguments") {
    RandomStream rng(22, 0);
    CHECK_THROWS(run_online(1, MutationKind::Bitwise, 10, 10, rng));
    CHECK_THROWS(run_online(5, MutationKind::Bitwise, 0, 10, rng));
    CHECK_THROWS(run_online(5, MutationKind::Bitwise, 10, 0, rng));

    // Event II keeps accepting ties, so it runs into the horizon.
    int horizon_hits = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomStream r(23, seed);
        const OnlineTrace t = run_online(6, MutationKind::Bitwise, 300, 5000, r);
        if (t.stop == OnlineStop::Horizon) {
            ++horizon_hits;
            CHECK(t.records.back().time == 300);
            CHECK(event_II(t.final_pair));
        }
    }
    CHECK(horizon_hits > 0);
}
