#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlea/harness/acceptance.hpp"
#include "tlea/harness/config.hpp"
#include "tlea/harness/experiment.hpp"
#include "tlea/harness/report.hpp"
#include "tlea/harness/scaling.hpp"
#include "tlea/oracle/bounds.hpp"
#include "tlea/oracle/lemma2.hpp"
#include "tlea/oracle/markov.hpp"

namespace {

using namespace tlea;
using namespace tlea::harness;

constexpr int kExitConfig = 1;
constexpr int kExitCheckFailed = 2;
constexpr const char* kOutDirEnv = "TLEA_OUT_DIR";

struct ExperimentFlags {
    std::string config_path;
    std::vector<std::string> algorithms;
    std::vector<std::size_t> n;
    std::vector<std::string> mu;
    std::optional<double> delta;
    std::optional<long long> trials;
    std::optional<double> budget_mult;
    std::optional<std::uint64_t> seed;
    bool no_early_exit = false;
    std::optional<unsigned> threads;
    std::string out;
    std::string format = "csv";
    bool scaling = false;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f, bool many_algorithms) {
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its fields");
    auto* alg = cmd->add_option("--alg", f.algorithms, "RLS, OEA, MuEA or Online");
    if (!many_algorithms) {
        alg->expected(1);
    }
    cmd->add_option("--n", f.n, "problem sizes (repeatable)");
    cmd->add_option("--mu", f.mu, "population sizes, or 'theorem' for the minimum the success bound needs");
    cmd->add_option("--delta", f.delta, "delta for mu=theorem and the bound column");
    cmd->add_option("--trials", f.trials, "trials per point");
    cmd->add_option("--budget-mult", f.budget_mult, "multiplier on the default generation budget");
    cmd->add_option("--seed", f.seed, "master seed");
    cmd->add_flag("--no-early-exit", f.no_early_exit, "run to the budget after a stagnation event");
    cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    cmd->add_option("--out", f.out, "output file (default: stdout, or $TLEA_OUT_DIR/<name>.<format>)");
    cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--scaling", f.scaling, "also print the runtime scaling table to stderr");
}

ExperimentConfig build_config(const ExperimentFlags& f, const std::string& algorithm) {
    ExperimentConfig c;
    c.n_values.clear();
    if (!f.config_path.empty()) {
        c = load_config(f.config_path, c);
    }
    std::vector<std::string> issues;
    if (!algorithm.empty()) {
        if (auto a = parse_algorithm(algorithm)) {
            c.algorithm = *a;
        } else {
            issues.push_back("algorithm: unknown value '" + algorithm + "'");
        }
    }
    if (!f.n.empty()) {
        c.n_values = f.n;
    }
    if (!f.mu.empty()) {
        if (f.mu.size() == 1 && f.mu.front() == "theorem") {
            c.mu.kind = MuRule::Kind::TheoremMinimum;
        } else {
            c.mu.kind = MuRule::Kind::Explicit;
            c.mu.values.clear();
            for (const auto& s : f.mu) {
                try {
                    std::size_t used = 0;
                    const long long v = std::stoll(s, &used);
                    if (used != s.size() || v < 0) {
                        throw std::invalid_argument(s);
                    }
                    c.mu.values.push_back(static_cast<std::size_t>(v));
                } catch (const std::logic_error&) {
                    issues.push_back("mu: expected integers or 'theorem', got '" + s + "'");
                }
            }
        }
    }
    if (f.delta) {
        c.mu.delta = *f.delta;
    }
    if (f.trials) {
        if (*f.trials < 0) {
            issues.emplace_back("trials: must be at least 1");
        } else {
            c.trials = static_cast<std::size_t>(*f.trials);
        }
    }
    if (f.budget_mult) {
        c.budget_multiplier = *f.budget_mult;
    }
    if (f.seed) {
        c.seed = *f.seed;
    }
    if (f.no_early_exit) {
        c.early_exit = false;
    }
    if (f.threads) {
        c.threads = *f.threads;
    }
    auto more = config_issues(c);
    issues.insert(issues.end(), more.begin(), more.end());
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    return c;
}

/// Writes `text` to --out, to $TLEA_OUT_DIR/<stem>.<format>, or to stdout.
void emit(const std::string& text, const ExperimentFlags& f, const std::string& stem) {
    std::string path = f.out;
    if (path.empty()) {
        if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
            std::filesystem::create_directories(dir);
            path = (std::filesystem::path(dir) / (stem + "." + f.format)).string();
        }
    }
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::FILE* out = std::fopen(path.c_str(), "wb");
    if (out == nullptr || std::fwrite(text.data(), 1, text.size(), out) != text.size()) {
        if (out != nullptr) {
            std::fclose(out);
        }
        throw std::runtime_error("cannot write " + path);
    }
    std::fclose(out);
    std::cerr << "wrote " << path << '\n';
}

std::string render(const ExperimentReport& report, const std::string& format) {
    return format == "json" ? to_json(report).dump(2) + "\n" : to_csv(report);
}

void print_scaling(const ExperimentReport& report) {
    const ScalingTable table = runtime_scaling_check(report);
    std::cerr << "n,mu,successes,cond_mean_gens,ratio\n";
    for (const auto& r : table.rows) {
        std::cerr << r.n << ',' << r.mu << ',' << r.successes << ',' << format_real(r.cond_mean_gens) << ','
                  << (r.ratio ? format_real(*r.ratio) : std::string("insufficient")) << '\n';
    }
    std::cerr << "spread " << format_real(table.spread) << (table.spread_flagged ? " (flagged)" : "") << '\n';
}

int cmd_run(const ExperimentFlags& f) {
    const ExperimentConfig c = build_config(f, f.algorithms.empty() ? std::string() : f.algorithms.front());
    const ExperimentReport report = run_experiment(c);
    for (const auto& p : report.points) {
        if (p.failed != 0) {
            std::cerr << "warning: " << p.failed << " trials raised at n=" << p.n << " mu=" << p.mu << '\n';
        }
        std::cerr << to_string(p.algorithm) << " n=" << p.n << " mu=" << p.mu
                  << ": excluded from conditional runtime " << format_real(p.excluded_fraction) << '\n';
    }
    emit(render(report, f.format), f, std::string(to_string(c.algorithm)) + "_report");
    if (f.scaling) {
        print_scaling(report);
    }
    return 0;
}

int cmd_sweep(const ExperimentFlags& f) {
    std::vector<std::string> algorithms = f.algorithms;
    if (algorithms.empty()) {
        algorithms.emplace_back();
    }
    ExperimentReport all;
    bool first = true;
    for (const auto& a : algorithms) {
        const ExperimentConfig c = build_config(f, a);
        ExperimentReport r = run_experiment(c);
        if (first) {
            all.config = c;
            first = false;
        }
        all.points.insert(all.points.end(), r.points.begin(), r.points.end());
    }
    emit(render(all, f.format), f, "sweep_report");
    if (f.scaling) {
        print_scaling(all);
    }
    return 0;
}

struct OracleFlags {
    std::vector<int> n;
    std::string quantity = "exact";
    std::string format = "csv";
    std::string out;
};

int cmd_oracle(const OracleFlags& f) {
    std::vector<int> ns = f.n;
    if (ns.empty()) {
        for (int n = 2; n <= 12; ++n) {
            ns.push_back(n);
        }
    }
    for (int n : ns) {
        if (n < 1 || (f.quantity == "brute" && n > 14)) {
            throw ConfigError({"n: must be at least 1 (at most 14 for brute)"});
        }
    }
    auto value = [&](int n, int a) -> long double {
        if (f.quantity == "lower") {
            return oracle::lemma2_lower_bound<long double>(n, a);
        }
        if (f.quantity == "brute") {
            return oracle::lemma2_bruteforce(n, a);
        }
        return oracle::lemma2_exact<long double>(n, a, n > 200 ? oracle::Precision::LogSpace
                                                               : oracle::Precision::Direct);
    };
    std::string text;
    if (f.format == "json") {
        nlohmann::json j = nlohmann::json::object();
        for (int n : ns) {
            for (int a = 1; a <= n; ++a) {
                j[std::to_string(n)][std::to_string(a)] = static_cast<double>(value(n, a));
            }
        }
        text = j.dump(2) + "\n";
    } else {
        text = "n,a,value\n";
        char buf[96];
        for (int n : ns) {
            for (int a = 1; a <= n; ++a) {
                std::snprintf(buf, sizeof buf, "%d,%d,%.15Lg\n", n, a, value(n, a));
                text += buf;
            }
        }
    }
    ExperimentFlags out;
    out.out = f.out;
    out.format = f.format;
    emit(text, out, "lemma2_" + f.quantity);
    return 0;
}

struct MarkovFlags {
    std::vector<std::size_t> n;
    std::string alg = "OEA";
    bool full = false;
    double tie = 1.0;
    std::string quantity = "failure";
    std::string format = "csv";
    std::string out;
};

std::string state_label(std::size_t n, std::size_t s, bool full) {
    if (full) {
        std::string bits;
        for (std::size_t i = 0; i < n; ++i) {
            bits += ((s >> i) & 1U) != 0 ? '1' : '0';
        }
        return std::string((s >> n) != 0 ? "1" : "0") + "|" + bits;
    }
    const auto ls = oracle::lumped_state(n, s);
    return std::string(ls.stored_first_bit ? "1" : "0") + "|" + (ls.first_bit ? "1" : "0") + "|" +
           std::to_string(ls.ones_after_first);
}

int cmd_markov(const MarkovFlags& f) {
    const auto alg = parse_algorithm(f.alg);
    if (!alg || (*alg != Algorithm::RLS && *alg != Algorithm::OEA)) {
        throw ConfigError({"alg: markov tables exist for RLS and OEA only"});
    }
    const MutationKind kind = *alg == Algorithm::RLS ? MutationKind::OneBit : MutationKind::Bitwise;
    std::vector<std::size_t> ns = f.n.empty() ? std::vector<std::size_t>{6} : f.n;
    std::vector<std::string> issues;
    for (std::size_t n : ns) {
        if (n < 2 || n > (f.full ? 10U : 1000U)) {
            issues.push_back("n: " + std::to_string(n) + " outside [2, " + (f.full ? "10" : "1000") + "]");
        }
    }
    if (!(f.tie > 0.0 && f.tie <= 1.0)) {
        issues.emplace_back("tie: must lie in (0, 1]");
    }
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    auto pick = [&](const auto& row) -> double {
        if (f.quantity == "optimum") {
            return row(oracle::kOptimum);
        }
        if (f.quantity == "eventI") {
            return row(oracle::kEventI);
        }
        if (f.quantity == "eventII") {
            return row(oracle::kEventII);
        }
        return row(oracle::kEventI) + row(oracle::kEventII);
    };

    nlohmann::json j = nlohmann::json::object();
    std::string text = "n,state,value\n";
    char buf[128];
    for (std::size_t n : ns) {
        const oracle::ChainOptions opts{f.tie};
        const auto result = f.full ? oracle::markov_full_absorption<double>(n, kind, opts)
                                   : oracle::markov_lumped_absorption<double>(n, kind, opts);
        const double uniform = pick(result.uniform_start);
        std::snprintf(buf, sizeof buf, "%zu,uniform,%.15g\n", n, uniform);
        text += buf;
        j[std::to_string(n)]["uniform"] = uniform;
        for (Eigen::Index s = 0; s < result.probabilities.rows(); ++s) {
            const std::string label = state_label(n, static_cast<std::size_t>(s), f.full);
            const double v = pick(result.probabilities.row(s));
            std::snprintf(buf, sizeof buf, "%zu,%s,%.15g\n", n, label.c_str(), v);
            text += buf;
            j[std::to_string(n)][label] = v;
        }
    }
    ExperimentFlags out;
    out.out = f.out;
    out.format = f.format;
    emit(f.format == "json" ? j.dump(2) + "\n" : text, out, "markov_" + f.alg);
    return 0;
}

struct BoundsFlags {
    std::vector<double> n;
    std::vector<double> mu;
    double delta = 1e-9;
    std::string format = "csv";
    std::string out;
};

int cmd_bounds(const BoundsFlags& f) {
    std::vector<double> ns = f.n;
    if (ns.empty()) {
        ns = {10, 100, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8};
    }
    std::vector<std::string> issues;
    for (double n : ns) {
        if (!(n >= 2)) {
            issues.emplace_back("n: every value must be at least 2");
            break;
        }
    }
    if (!(f.delta > 0)) {
        issues.emplace_back("delta: must be positive");
    }
    for (double mu : f.mu) {
        if (!(mu >= 1)) {
            issues.emplace_back("mu: every value must be at least 1");
            break;
        }
    }
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    nlohmann::json rows = nlohmann::json::array();
    std::string text = "n,mu,delta,min_population,theorem1,theorem1_vacuous,theorem2,theorem2_vacuous,theorem3,"
                       "theorem3_vacuous\n";
    for (double n : ns) {
        const std::size_t minimum = oracle::min_population(static_cast<std::size_t>(n), f.delta);
        std::vector<double> mus = f.mu.empty() ? std::vector<double>{static_cast<double>(minimum)} : f.mu;
        for (double mu : mus) {
            const auto t1 = oracle::theorem1_bound(n);
            const auto t2 = oracle::theorem2_bound(n, mu, f.delta);
            const auto t3 = oracle::theorem3_bound(n, mu, f.delta);
            text += format_real(n) + "," + format_real(mu) + "," + format_real(f.delta) + "," +
                    std::to_string(minimum) + "," + format_real(t1.value) + "," + (t1.vacuous ? "1" : "0") + "," +
                    format_real(t2.value) + "," + (t2.vacuous ? "1" : "0") + "," + format_real(t3.value) + "," +
                    (t3.vacuous ? "1" : "0") + "\n";
            rows.push_back({{"n", n},
                            {"mu", mu},
                            {"delta", f.delta},
                            {"min_population", minimum},
                            {"theorem1", t1.value},
                            {"theorem1_vacuous", t1.vacuous},
                            {"theorem2", t2.value},
                            {"theorem2_vacuous", t2.vacuous},
                            {"theorem3", t3.value},
                            {"theorem3_vacuous", t3.vacuous}});
        }
    }
    ExperimentFlags out;
    out.out = f.out;
    out.format = f.format;
    emit(f.format == "json" ? rows.dump(2) + "\n" : text, out, "bounds");
    return 0;
}

struct CheckFlags {
    std::vector<int> criteria;
    unsigned threads = 0;
    std::uint64_t seed = AcceptanceOptions{}.seed;
};

int cmd_check(const CheckFlags& f) {
    for (int id : f.criteria) {
        if (id < 1 || id > kCriterionCount) {
            throw ConfigError({"criterion: must lie in [1, " + std::to_string(kCriterionCount) + "]"});
        }
    }
    AcceptanceOptions opts;
    opts.threads = f.threads;
    opts.seed = f.seed;
    bool all = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!f.criteria.empty() && std::find(f.criteria.begin(), f.criteria.end(), id) == f.criteria.end()) {
            continue;
        }
        const CriterionResult r = run_criterion(id, opts);
        std::cout << format_result(r) << std::endl;
        all = all && r.passed;
    }
    return all ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments on the time-linkage OneMax function"};
    app.require_subcommand(1);

    ExperimentFlags run_flags;
    auto* run = app.add_subcommand("run", "run one experiment and write its report");
    add_experiment_flags(run, run_flags, false);

    ExperimentFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "run an algorithm x n x mu grid into one report");
    add_experiment_flags(sweep, sweep_flags, true);

    OracleFlags oracle_flags;
    auto* oracle_cmd = app.add_subcommand("oracle", "table of the one-step improvement probability");
    oracle_cmd->add_option("--n", oracle_flags.n, "problem sizes (default 2..12)");
    oracle_cmd->add_option("--quantity", oracle_flags.quantity, "exact, lower or brute")
        ->check(CLI::IsMember({"exact", "lower", "brute"}));
    oracle_cmd->add_option("--format", oracle_flags.format)->check(CLI::IsMember({"csv", "json"}));
    oracle_cmd->add_option("--out", oracle_flags.out);

    MarkovFlags markov_flags;
    auto* markov = app.add_subcommand("markov", "absorption probabilities of the single individual chain");
    markov->add_option("--n", markov_flags.n, "problem sizes (default 6)");
    markov->add_option("--alg", markov_flags.alg, "RLS or OEA");
    markov->add_flag("--full", markov_flags.full, "use the 2^(n+1) state chain instead of the lumped one");
    markov->add_option("--tie", markov_flags.tie, "probability that an equally fit offspring replaces the parent");
    markov->add_option("--quantity", markov_flags.quantity, "failure, optimum, eventI or eventII")
        ->check(CLI::IsMember({"failure", "optimum", "eventI", "eventII"}));
    markov->add_option("--format", markov_flags.format)->check(CLI::IsMember({"csv", "json"}));
    markov->add_option("--out", markov_flags.out);

    BoundsFlags bounds_flags;
    auto* bounds = app.add_subcommand("bounds", "theorem bound tables");
    bounds->add_option("--n", bounds_flags.n, "problem sizes");
    bounds->add_option("--mu", bounds_flags.mu, "population sizes (default: the minimum for each n)");
    bounds->add_option("--delta", bounds_flags.delta);
    bounds->add_option("--format", bounds_flags.format)->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bounds_flags.out);

    CheckFlags check_flags;
    auto* check = app.add_subcommand("check", "run the acceptance suite");
    check->add_option("--criterion", check_flags.criteria, "criteria to run (default all)");
    check->add_option("--threads", check_flags.threads);
    check->add_option("--seed", check_flags.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run) {
            return cmd_run(run_flags);
        }
        if (*sweep) {
            return cmd_sweep(sweep_flags);
        }
        if (*oracle_cmd) {
            return cmd_oracle(oracle_flags);
        }
        if (*markov) {
            return cmd_markov(markov_flags);
        }
        if (*bounds) {
            return cmd_bounds(bounds_flags);
        }
        if (*check) {
            return cmd_check(check_flags);
        }
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
