#ifndef TLEA_HARNESS_SCALING_HPP
#define TLEA_HARNESS_SCALING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tlea/harness/experiment.hpp"

namespace tlea::harness {

struct ScalingRow {
    std::size_t n;
    std::size_t mu;
    std::size_t successes;
    double cond_mean_gens;
    /// cond_mean_gens / (mu n); empty when fewer than two successes.
    std::optional<double> ratio;
    bool insufficient;
};

struct ScalingTable {
    std::vector<ScalingRow> rows;
    /// max ratio / min ratio over rows that have one.
    double spread;
    /// Set when spread exceeds the allowed factor.
    bool spread_flagged;
    /// Set when some row lacks the two successes needed for a ratio.
    bool insufficient_flagged;

    bool ok() const noexcept { return !spread_flagged && !insufficient_flagged; }
};

/// Ratio of conditional mean generations to mu n per point. Throws
/// std::invalid_argument unless the report covers at least two distinct n.
ScalingTable runtime_scaling_check(const ExperimentReport& report, double max_spread = 2.0);

}  // namespace tlea::harness

#endif  // TLEA_HARNESS_SCALING_HPP
