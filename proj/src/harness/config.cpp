#include "tlea/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "tlea/oracle/bounds.hpp"

namespace tlea::harness {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
    std::ostringstream out;
    out << "invalid configuration";
    for (const auto& issue : issues) {
        out << "\n  " << issue;
    }
    return out.str();
}

std::vector<std::size_t> size_list(const nlohmann::json& v, const char* field,
                                   std::vector<std::string>& issues) {
    std::vector<std::size_t> out;
    auto take = [&](const nlohmann::json& e) {
        if (!e.is_number_integer() || e.get<long long>() < 0) {
            issues.push_back(std::string(field) + ": expected non-negative integers");
            return;
        }
        out.push_back(e.get<std::size_t>());
    };
    if (v.is_array()) {
        for (const auto& e : v) {
            take(e);
        }
    } else {
        take(v);
    }
    return out;
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::RLS:
        return "RLS";
    case Algorithm::OEA:
        return "OEA";
    case Algorithm::MuEA:
        return "MuEA";
    case Algorithm::Online:
        return "Online";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (Algorithm a : {Algorithm::RLS, Algorithm::OEA, Algorithm::MuEA, Algorithm::Online}) {
        if (name == to_string(a)) {
            return a;
        }
    }
    return std::nullopt;
}

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::vector<std::string> config_issues(const ExperimentConfig& config) {
    std::vector<std::string> issues;
    if (config.n_values.empty()) {
        issues.emplace_back("n: at least one value required");
    }
    for (std::size_t n : config.n_values) {
        if (n < 2) {
            issues.push_back("n: every value must be at least 2 (got " + std::to_string(n) + ")");
        }
    }
    if (config.trials < 1) {
        issues.emplace_back("trials: must be at least 1");
    }
    if (!(config.budget_multiplier > 0.0) || !std::isfinite(config.budget_multiplier)) {
        issues.emplace_back("budget_mult: must be a positive finite number");
    }
    if (config.algorithm == Algorithm::MuEA) {
        if (config.mu.kind == MuRule::Kind::Explicit) {
            if (config.mu.values.empty()) {
                issues.emplace_back("mu: at least one value required");
            }
            for (std::size_t mu : config.mu.values) {
                if (mu < 1) {
                    issues.emplace_back("mu: every value must be at least 1");
                    break;
                }
            }
        } else if (!(config.mu.delta > 0.0) || !std::isfinite(config.mu.delta)) {
            issues.emplace_back("delta: must be a positive finite number");
        }
    }
    return issues;
}

void validate(const ExperimentConfig& config) {
    auto issues = config_issues(config);
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
}

std::vector<std::size_t> resolve_mu(const ExperimentConfig& config, std::size_t n) {
    if (config.algorithm != Algorithm::MuEA) {
        return {1};
    }
    if (config.mu.kind == MuRule::Kind::TheoremMinimum) {
        return {oracle::min_population(n, config.mu.delta)};
    }
    return config.mu.values;
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base) {
    static const std::set<std::string> known{"algorithm", "n",     "mu",         "delta",  "trials",
                                             "budget_mult", "seed", "early_exit", "threads"};
    std::vector<std::string> issues;
    if (!j.is_object()) {
        throw ConfigError({"config: top level must be a JSON object"});
    }
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            issues.push_back(key + ": unknown field");
        }
    }
    if (j.contains("algorithm")) {
        const auto& v = j["algorithm"];
        const auto alg = v.is_string() ? parse_algorithm(v.get<std::string>()) : std::nullopt;
        if (alg) {
            base.algorithm = *alg;
        } else {
            issues.emplace_back("algorithm: expected one of RLS, OEA, MuEA, Online");
        }
    }
    if (j.contains("n")) {
        base.n_values = size_list(j["n"], "n", issues);
    }
    if (j.contains("mu")) {
        const auto& v = j["mu"];
        if (v.is_string()) {
            if (v.get<std::string>() == "theorem") {
                base.mu.kind = MuRule::Kind::TheoremMinimum;
            } else {
                issues.emplace_back("mu: expected integers or \"theorem\"");
            }
        } else {
            base.mu.kind = MuRule::Kind::Explicit;
            base.mu.values = size_list(v, "mu", issues);
        }
    }
    if (j.contains("delta")) {
        if (j["delta"].is_number()) {
            base.mu.delta = j["delta"].get<double>();
        } else {
            issues.emplace_back("delta: expected a number");
        }
    }
    if (j.contains("trials")) {
        const auto& v = j["trials"];
        if (v.is_number_integer() && v.get<long long>() >= 0) {
            base.trials = v.get<std::size_t>();
        } else {
            issues.emplace_back("trials: expected a non-negative integer");
        }
    }
    if (j.contains("budget_mult")) {
        if (j["budget_mult"].is_number()) {
            base.budget_multiplier = j["budget_mult"].get<double>();
        } else {
            issues.emplace_back("budget_mult: expected a number");
        }
    }
    if (j.contains("seed")) {
        if (j["seed"].is_number_unsigned() || (j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0)) {
            base.seed = j["seed"].get<std::uint64_t>();
        } else {
            issues.emplace_back("seed: expected a non-negative integer");
        }
    }
    if (j.contains("early_exit")) {
        if (j["early_exit"].is_boolean()) {
            base.early_exit = j["early_exit"].get<bool>();
        } else {
            issues.emplace_back("early_exit: expected a boolean");
        }
    }
    if (j.contains("threads")) {
        const auto& v = j["threads"];
        if (v.is_number_integer() && v.get<long long>() >= 0) {
            base.threads = v.get<unsigned>();
        } else {
            issues.emplace_back("threads: expected a non-negative integer");
        }
    }
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError({"config: cannot open " + path});
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError({"config: " + path + ": " + e.what()});
    }
    return config_from_json(j, std::move(base));
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
    nlohmann::json j;
    j["algorithm"] = std::string(to_string(config.algorithm));
    j["n"] = config.n_values;
    if (config.mu.kind == MuRule::Kind::TheoremMinimum) {
        j["mu"] = "theorem";
    } else {
        j["mu"] = config.mu.values;
    }
    j["delta"] = config.mu.delta;
    j["trials"] = config.trials;
    j["budget_mult"] = config.budget_multiplier;
    j["seed"] = config.seed;
    j["early_exit"] = config.early_exit;
    j["threads"] = config.threads;
    return j;
}

}  // namespace tlea::harness
