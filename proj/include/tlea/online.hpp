#ifndef TLEA_ONLINE_HPP
#define TLEA_ONLINE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tlea/fitness.hpp"
#include "tlea/mutation.hpp"
#include "tlea/random.hpp"

namespace tlea {

/// One committed decision of the online process.
struct OnlineRecord {
    std::size_t time;        ///< fitness time step t (>= 2)
    std::uint64_t generation;
    TimePair pair;           ///< (x_1^{t-1}, x^t)
    double objective;        ///< discounted online objective at t
};

enum class OnlineStop { Goal, Horizon, Stalled };

struct OnlineTrace {
    std::vector<OnlineRecord> records;
    OnlineHistory history;  ///< x^0 .. x^t
    OnlineStop stop = OnlineStop::Horizon;
    std::uint64_t generations = 0;
    TimePair final_pair;
};

/// Drives the single individual algorithm in "optimize the present" mode.
///
/// x^0 and x^1 are drawn uniformly. Time advances by one exactly when a
/// generation's offspring is accepted. Stops when t reaches `time_horizon`,
/// when the pair's onemax01 value reaches n, or after `budget_per_step`
/// consecutive generations without an acceptance.
OnlineTrace run_online(std::size_t n, MutationKind kind, std::size_t time_horizon,
                       std::uint64_t budget_per_step, RandomStream& rng);

}  // namespace tlea

#endif  // TLEA_ONLINE_HPP
