#ifndef TLEA_HARNESS_CONFIG_HPP
#define TLEA_HARNESS_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tlea::harness {

enum class Algorithm { RLS, OEA, MuEA, Online };

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Explicit population sizes, or the smallest size the success theorem
/// allows for each n at the given delta.
struct MuRule {
    enum class Kind { Explicit, TheoremMinimum };
    Kind kind = Kind::Explicit;
    std::vector<std::size_t> values{1};
    double delta = 1e-9;
};

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::OEA;
    std::vector<std::size_t> n_values;
    MuRule mu;
    std::size_t trials = 1000;
    /// Scales the default generation budget (100 n^2 single individual,
    /// 100 mu n population).
    double budget_multiplier = 1.0;
    std::uint64_t seed = 1;
    bool early_exit = true;
    /// Worker threads; 0 means hardware concurrency. Never affects results.
    unsigned threads = 0;
};

/// Raised for invalid configurations. Each issue names the offending field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// Field-level problems with `config`; empty when valid.
std::vector<std::string> config_issues(const ExperimentConfig& config);

/// Throws ConfigError if config_issues is non-empty.
void validate(const ExperimentConfig& config);

/// Population sizes used at dimension n. Single individual algorithms always use {1}.
std::vector<std::size_t> resolve_mu(const ExperimentConfig& config, std::size_t n);

/// Reads the JSON form:
///   {"algorithm": "MuEA", "n": [10, 20], "mu": [50] | "theorem", "delta": 1e-9,
///    "trials": 100, "budget_mult": 1.0, "seed": 7, "early_exit": true, "threads": 0}
/// Missing keys keep the defaults in `base`. Unknown keys and type errors
/// raise ConfigError. The result is not validated.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

nlohmann::json config_to_json(const ExperimentConfig& config);

}  // namespace tlea::harness

#endif  // TLEA_HARNESS_CONFIG_HPP
