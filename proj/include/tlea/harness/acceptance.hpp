#ifndef TLEA_HARNESS_ACCEPTANCE_HPP
#define TLEA_HARNESS_ACCEPTANCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tlea::harness {

struct AcceptanceOptions {
    std::uint64_t seed = 20240517;
    /// Worker threads for the Monte Carlo criteria; 0 = hardware concurrency.
    unsigned threads = 0;
};

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs the given criteria (all of them when `ids` is empty) in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::span<const int> ids = {});

/// "PASS  3  title  (1.2 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace tlea::harness

#endif  // TLEA_HARNESS_ACCEPTANCE_HPP
