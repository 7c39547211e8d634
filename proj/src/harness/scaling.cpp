#include "tlea/harness/scaling.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace tlea::harness {

ScalingTable runtime_scaling_check(const ExperimentReport& report, double max_spread) {
    std::set<std::size_t> distinct;
    for (const auto& p : report.points) {
        distinct.insert(p.n);
    }
    if (distinct.size() < 2) {
        throw std::invalid_argument("runtime_scaling_check: need points at two or more n values");
    }
    ScalingTable table{{}, std::numeric_limits<double>::quiet_NaN(), false, false};
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& p : report.points) {
        ScalingRow row{p.n, p.mu, p.count(OutcomeKind::OptimumFound), p.cond_mean_gens, std::nullopt, false};
        if (row.successes < 2) {
            row.insufficient = true;
            table.insufficient_flagged = true;
        } else {
            const double r = p.cond_mean_gens / (static_cast<double>(p.mu) * static_cast<double>(p.n));
            row.ratio = r;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        table.rows.push_back(row);
    }
    if (hi > 0.0 && lo > 0.0) {
        table.spread = hi / lo;
        table.spread_flagged = table.spread > max_spread;
    }
    return table;
}

}  // namespace tlea::harness
