#include "tlea/online.hpp"

#include <stdexcept>
#include <utility>

#include "tlea/algorithms.hpp"

namespace tlea {

OnlineTrace run_online(std::size_t n, MutationKind kind, std::size_t time_horizon,
                       std::uint64_t budget_per_step, RandomStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("run_online: n must be at least 2");
    }
    if (time_horizon < 1 || budget_per_step < 1) {
        throw std::invalid_argument("run_online: horizons must be at least 1");
    }
    BitString x0 = uniform_random_bitstring(n, rng);
    BitString x1 = uniform_random_bitstring(n, rng);
    Alg1State state{TimePair{x0.first(), x1}, 0, kind};
    const int goal = static_cast<int>(n);

    OnlineTrace trace{{}, OnlineHistory{}, OnlineStop::Horizon, 0, state.pair};
    trace.history.push(std::move(x0));
    trace.history.push(std::move(x1));
    OnlineResidual residual;
    std::size_t t = 1;
    // First bit of x^{t-2}, fed to the residual when time advances.
    bool two_back = false;

    if (onemax01(state.pair) == goal) {
        trace.stop = OnlineStop::Goal;
        return trace;
    }
    while (t < time_horizon) {
        std::uint64_t waited = 0;
        bool accepted = false;
        while (waited < budget_per_step) {
            const bool prev_stored = state.pair.prev_first_bit;
            accepted = alg1_advance(state, rng);
            ++waited;
            if (accepted) {
                two_back = prev_stored;
                break;
            }
        }
        trace.generations = state.generation;
        if (!accepted) {
            trace.stop = OnlineStop::Stalled;
            break;
        }
        ++t;
        residual.advance(two_back);
        const double value = residual.value() + static_cast<double>(onemax01(state.pair));
        trace.history.push(state.pair.current);
        trace.records.push_back(OnlineRecord{t, state.generation, state.pair, value});
        if (onemax01(state.pair) == goal) {
            trace.stop = OnlineStop::Goal;
            break;
        }
    }
    trace.final_pair = state.pair;
    return trace;
}

}  // namespace tlea
