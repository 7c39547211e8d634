#include "tlea/harness/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tlea/algorithms.hpp"
#include "tlea/detection.hpp"
#include "tlea/harness/experiment.hpp"
#include "tlea/harness/report.hpp"
#include "tlea/harness/scaling.hpp"
#include "tlea/harness/stats.hpp"
#include "tlea/mutation.hpp"
#include "tlea/oracle/bounds.hpp"
#include "tlea/oracle/chernoff.hpp"
#include "tlea/oracle/lemma2.hpp"
#include "tlea/oracle/markov.hpp"
#include "tlea/oracle/monotone.hpp"

namespace tlea::harness {

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// 1 ------------------------------------------------------------------------

Outcome lemma2_equivalence(const AcceptanceOptions&) {
    long double worst = 0;
    int bound_failures = 0;
    int cases = 0;
    for (int n = 2; n <= 12; ++n) {
        for (int a = 1; a <= n; ++a) {
            const long double exact = oracle::lemma2_exact<long double>(n, a);
            const long double brute = oracle::lemma2_bruteforce(n, a);
            worst = std::max(worst, std::abs(exact - brute));
            if (!(exact > oracle::lemma2_lower_bound<long double>(n, a))) {
                ++bound_failures;
            }
            ++cases;
        }
    }
    return {worst <= 1e-12L && bound_failures == 0,
            fmt("%d cases, max |exact - brute| = %.3Le, lower bound violations = %d", cases, worst, bound_failures)};
}

// 2 ------------------------------------------------------------------------

ExperimentConfig single_point(Algorithm alg, std::size_t n, std::size_t trials, std::uint64_t seed,
                              unsigned threads) {
    ExperimentConfig c;
    c.algorithm = alg;
    c.n_values = {n};
    c.trials = trials;
    c.seed = seed;
    c.threads = threads;
    return c;
}

ExperimentConfig markov_agreement_config(Algorithm alg, const AcceptanceOptions& o, unsigned threads) {
    return single_point(alg, 6, 100000, o.seed, threads);
}

Outcome markov_agreement(const AcceptanceOptions& o) {
    std::ostringstream detail;
    bool ok = true;
    for (Algorithm alg : {Algorithm::RLS, Algorithm::OEA}) {
        const MutationKind kind = alg == Algorithm::RLS ? MutationKind::OneBit : MutationKind::Bitwise;
        const double exact = oracle::markov_full_absorption<double>(6, kind).failure_probability();
        const auto report = run_experiment(markov_agreement_config(alg, o, o.threads));
        const PointReport& p = report.points.front();
        const bool hit = p.failure99.contains(exact);
        ok = ok && hit && p.failed == 0;
        detail << to_string(alg) << ": empirical " << format_real(p.failure_rate) << " 99% ["
               << format_real(p.failure99.low) << ", " << format_real(p.failure99.high) << "] exact "
               << format_real(exact) << (hit ? "" : " OUTSIDE") << "; ";
    }
    return {ok, detail.str()};
}

// 3 ------------------------------------------------------------------------

Outcome lumped_validity(const AcceptanceOptions&) {
    double worst = 0;
    for (std::size_t n = 2; n <= 10; ++n) {
        for (MutationKind kind : {MutationKind::OneBit, MutationKind::Bitwise}) {
            const auto full = oracle::markov_full_absorption<double>(n, kind);
            const auto lumped = oracle::markov_lumped_absorption<double>(n, kind);
            const std::size_t strings = std::size_t{1} << n;
            for (std::size_t s = 0; s < oracle::full_state_count(n); ++s) {
                const std::size_t x = s & (strings - 1);
                const oracle::LumpedState ls{(s >> n) != 0, (x & 1U) != 0,
                                             static_cast<std::size_t>(std::popcount(x >> 1))};
                const auto r = static_cast<Eigen::Index>(oracle::lumped_state_index(n, ls));
                const auto f = static_cast<Eigen::Index>(s);
                worst = std::max(worst, (full.probabilities.row(f) - lumped.probabilities.row(r)).cwiseAbs().maxCoeff());
            }
            worst = std::max(worst, (full.uniform_start - lumped.uniform_start).cwiseAbs().maxCoeff());
        }
    }
    return {worst <= 1e-10, fmt("n in [2, 10], both mutations: max deviation %.3e", worst)};
}

// 4 ------------------------------------------------------------------------

Outcome failure_trend(const AcceptanceOptions& o) {
    std::ostringstream detail;
    bool ok = true;
    double pred200 = 0;
    for (std::size_t n : {20, 50, 100, 200}) {
        const double pred = oracle::markov_lumped_absorption<double>(n, MutationKind::Bitwise).failure_probability();
        const auto report = run_experiment(single_point(Algorithm::OEA, n, 1000, o.seed, o.threads));
        const PointReport& p = report.points.front();
        const double se = binomial_standard_error(pred, p.trials);
        const double gap = std::abs(p.failure_rate - pred);
        const bool hit = gap <= 3.0 * se;
        ok = ok && hit;
        if (n == 200) {
            pred200 = pred;
        }
        detail << "n=" << n << " empirical " << format_real(p.failure_rate) << " predicted " << format_real(pred)
               << " (" << format_real(gap / se) << " SE); ";
    }
    ok = ok && pred200 >= 0.9;
    detail << "prediction at 200 " << (pred200 >= 0.9 ? ">= 0.9" : "< 0.9");
    return {ok, detail.str()};
}

// 5 ------------------------------------------------------------------------

ExperimentConfig population_success_config(const AcceptanceOptions& o, unsigned threads) {
    ExperimentConfig c = single_point(Algorithm::MuEA, 20, 100, o.seed, threads);
    c.mu.kind = MuRule::Kind::TheoremMinimum;
    c.mu.delta = 1e-9;
    return c;
}

Outcome population_success(const AcceptanceOptions& o) {
    const auto report = run_experiment(population_success_config(o, o.threads));
    const PointReport& p = report.points.front();
    return {p.success_rate >= 0.95,
            fmt("mu = %zu, %zu/%zu reached the optimum (rate %s)", p.mu, p.count(OutcomeKind::OptimumFound), p.trials,
                format_real(p.success_rate).c_str())};
}

// 6 ------------------------------------------------------------------------

Outcome runtime_scaling(const AcceptanceOptions& o) {
    ExperimentConfig c;
    c.algorithm = Algorithm::MuEA;
    c.n_values = {10, 20, 40};
    c.mu.kind = MuRule::Kind::TheoremMinimum;
    c.mu.delta = 1e-9;
    c.trials = 200;
    c.seed = o.seed;
    c.threads = o.threads;
    const auto table = runtime_scaling_check(run_experiment(c));
    std::ostringstream detail;
    for (const auto& row : table.rows) {
        detail << "n=" << row.n << " mu=" << row.mu << " ratio "
               << (row.ratio ? format_real(*row.ratio) : std::string("n/a")) << "; ";
    }
    detail << "max/min " << format_real(table.spread) << " (limit 2)";
    return {table.ok(), detail.str()};
}

// 7 ------------------------------------------------------------------------

constexpr std::size_t kPersistN = 20;
constexpr std::size_t kPersistTrials = 1000;
constexpr std::uint64_t kPersistGenerations = 10000;

TimePair event_I_pair(std::size_t n, RandomStream& rng) {
    BitString x = uniform_random_bitstring(n, rng);
    x.set(0, true);
    while (x.all_ones()) {
        x = uniform_random_bitstring(n, rng);
        x.set(0, true);
    }
    return TimePair{false, std::move(x)};
}

TimePair event_II_pair(std::size_t n) {
    return TimePair{true, BitString(n, true)};
}

/// Returns the number of trials that broke persistence.
std::size_t persist_single(bool event_one, std::uint64_t seed, unsigned threads) {
    std::vector<bool> threw;
    const auto outcomes = run_indexed(
        kPersistTrials, threads,
        [&](std::size_t i) {
            RandomStream rng(seed, i);
            const MutationKind kind = (i % 2 == 0) ? MutationKind::Bitwise : MutationKind::OneBit;
            Alg1State s{event_one ? event_I_pair(kPersistN, rng) : event_II_pair(kPersistN), 0, kind};
            for (std::uint64_t g = 0; g < kPersistGenerations; ++g) {
                alg1_advance(s, rng);
                const bool holds = event_one ? event_I(s.pair) : event_II(s.pair);
                if (!holds || is_optimum(s.pair)) {
                    return TrialOutcome{OutcomeKind::OptimumFound, s.generation};
                }
            }
            return TrialOutcome{event_one ? OutcomeKind::StagnatedEventI : OutcomeKind::StagnatedEventII,
                                s.generation};
        },
        &threw);
    const OutcomeKind expect = event_one ? OutcomeKind::StagnatedEventI : OutcomeKind::StagnatedEventII;
    std::size_t broken = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        broken += (threw[i] || outcomes[i].kind != expect) ? 1 : 0;
    }
    return broken;
}

std::size_t persist_population(bool event_one, std::uint64_t seed, unsigned threads) {
    std::vector<bool> threw;
    const auto outcomes = run_indexed(
        kPersistTrials, threads,
        [&](std::size_t i) {
            RandomStream rng(seed, i);
            const std::size_t mu = 2 + i % 9;
            std::vector<TimePair> slots;
            for (std::size_t k = 0; k < mu; ++k) {
                slots.push_back(event_one ? event_I_pair(kPersistN, rng) : event_II_pair(kPersistN));
            }
            Population pop(std::move(slots));
            for (std::uint64_t g = 0; g < kPersistGenerations; ++g) {
                const Alg2StepResult r = alg2_advance(pop, rng);
                const bool holds = event_one ? event_I_prime(pop) : event_II_prime(pop);
                if (!holds || r.optimum || pop.optimum_slots() != 0) {
                    return TrialOutcome{OutcomeKind::OptimumFound, pop.generation};
                }
            }
            return TrialOutcome{event_one ? OutcomeKind::StagnatedEventI : OutcomeKind::StagnatedEventII,
                                pop.generation};
        },
        &threw);
    const OutcomeKind expect = event_one ? OutcomeKind::StagnatedEventI : OutcomeKind::StagnatedEventII;
    std::size_t broken = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        broken += (threw[i] || outcomes[i].kind != expect) ? 1 : 0;
    }
    return broken;
}

Outcome absorption_persistence(const AcceptanceOptions& o) {
    const std::size_t b1 = persist_single(true, mix64(o.seed ^ 0x71), o.threads);
    const std::size_t b2 = persist_single(false, mix64(o.seed ^ 0x72), o.threads);
    const std::size_t b3 = persist_population(true, mix64(o.seed ^ 0x73), o.threads);
    const std::size_t b4 = persist_population(false, mix64(o.seed ^ 0x74), o.threads);
    return {b1 + b2 + b3 + b4 == 0,
            fmt("broken trials of %zu x %llu generations: I %zu, II %zu, I' %zu, II' %zu", kPersistTrials,
                static_cast<unsigned long long>(kPersistGenerations), b1, b2, b3, b4)};
}

// 8 ------------------------------------------------------------------------

Outcome monotonicity(const AcceptanceOptions&) {
    std::size_t h_violations = 0;
    std::size_t h_checks = 0;
    for (int n = 2; n <= 500; ++n) {
        for (int a = 1; a < n; ++a) {
            long double prev = oracle::log_h1<long double>(a, n, 0);
            for (int d = 1; d <= n - a - 1; ++d) {
                const long double cur = oracle::log_h1<long double>(a, n, d);
                h_violations += cur < prev ? 0 : 1;
                ++h_checks;
                prev = cur;
            }
            prev = oracle::log_h2<long double>(a, n, 1);
            for (int d = 2; d <= n - a; ++d) {
                const long double cur = oracle::log_h2<long double>(a, n, d);
                h_violations += cur < prev ? 0 : 1;
                ++h_checks;
                prev = cur;
            }
        }
    }

    std::size_t g_violations = 0;
    for (int n = 1; n <= 10000; ++n) {
        const auto top = static_cast<int>(std::floor(std::sqrt(static_cast<long double>(n))));
        for (int a = 2; a <= top; ++a) {
            const long double cur = oracle::log_g_fn<long double>(a, n);
            const long double prev = oracle::log_g_fn<long double>(a - 1, n);
            g_violations += cur < prev ? 0 : 1;
        }
    }

    // 1000 log-spaced integers in ((4e)^2, 1e6].
    const double lo = std::log(std::floor(oracle::population_theorem_min_n(0.0)) + 1.0);
    const double hi = std::log(1e6);
    std::size_t aux_violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const double n = std::round(std::exp(lo + (hi - lo) * i / 999.0));
        aux_violations += oracle::aux_ineq<long double>(n) ? 0 : 1;
    }
    return {h_violations == 0 && g_violations == 0 && aux_violations == 0,
            fmt("h1/h2: %zu steps, %zu violations; g: %zu violations; aux: %zu of 1000 fail", h_checks, h_violations,
                g_violations, aux_violations)};
}

// 9 ------------------------------------------------------------------------

Outcome chernoff(const AcceptanceOptions&) {
    using oracle::Tail;
    const std::vector<double> lengths{1.0, 2.0, 0.5, 3.0};
    bool boundary = oracle::chernoff_lower(40.0, 0.0) == 1.0 &&
                    oracle::chernoff_additive<double>(lengths, 0.0) == 1.0 &&
                    oracle::chernoff_geometric(25, 0.1, 0.0, Tail::Upper) == 1.0 &&
                    oracle::chernoff_geometric(25, 0.1, 0.0, Tail::Lower) == 1.0;
    std::size_t violations = 0;
    double prev_lower = 1.0;
    double prev_geo_up = 1.0;
    double prev_geo_low = 1.0;
    for (int i = 1; i <= 100; ++i) {
        const double d = i / 100.0;
        const double lower = oracle::chernoff_lower(40.0, d);
        const double up = oracle::chernoff_geometric(25, 0.1, d, Tail::Upper);
        const double low = oracle::chernoff_geometric(25, 0.1, d, Tail::Lower);
        violations += (lower < prev_lower ? 0 : 1) + (up < prev_geo_up ? 0 : 1) + (low < prev_geo_low ? 0 : 1);
        prev_lower = lower;
        prev_geo_up = up;
        prev_geo_low = low;
    }
    for (int i = 101; i <= 500; ++i) {
        const double d = i / 100.0;
        const double up = oracle::chernoff_geometric(25, 0.1, d, Tail::Upper);
        violations += up < prev_geo_up ? 0 : 1;
        prev_geo_up = up;
    }
    double prev_add = 1.0;
    for (int i = 1; i <= 100; ++i) {
        const double lambda = i / 20.0;
        const double v = oracle::chernoff_additive<double>(lengths, lambda);
        violations += v < prev_add ? 0 : 1;
        prev_add = v;
    }
    return {boundary && violations == 0,
            fmt("boundary values %s; %zu monotonicity violations", boundary ? "equal 1" : "WRONG", violations)};
}

// 10 -----------------------------------------------------------------------

Outcome determinism(const AcceptanceOptions& o) {
    const unsigned base = o.threads == 1 ? 2 : 1;
    const unsigned other = o.threads > 1 ? o.threads : 4;
    std::vector<std::string> mismatches;
    auto compare = [&](const char* name, auto make) {
        const std::string a = to_csv(run_experiment(make(base)));
        const std::string b = to_csv(run_experiment(make(other)));
        if (a != b) {
            mismatches.emplace_back(name);
        }
    };
    for (Algorithm alg : {Algorithm::RLS, Algorithm::OEA}) {
        compare(alg == Algorithm::RLS ? "n=6 RLS" : "n=6 OEA",
                [&](unsigned t) { return markov_agreement_config(alg, o, t); });
    }
    compare("population n=20", [&](unsigned t) { return population_success_config(o, t); });
    std::string detail = fmt("workers %u vs %u: ", base, other);
    if (mismatches.empty()) {
        detail += "all CSV reports byte-identical";
    } else {
        for (const auto& m : mismatches) {
            detail += m + " differs; ";
        }
    }
    return {mismatches.empty(), detail};
}

struct Entry {
    const char* title;
    double limit_seconds;  ///< 0 = no limit
    Outcome (*run)(const AcceptanceOptions&);
};

const Entry kEntries[kCriterionCount] = {
    {"closed-form improvement probability equals enumeration", 60, lemma2_equivalence},
    {"n=6 Monte Carlo failure rate vs exact chain", 120, markov_agreement},
    {"lumped chain equals full chain", 0, lumped_validity},
    {"(1+1) EA failure rate tracks lumped prediction", 300, failure_trend},
    {"population algorithm success at n=20", 600, population_success},
    {"population runtime scales as mu n", 0, runtime_scaling},
    {"stagnation events persist", 0, absorption_persistence},
    {"monotonicity of helper functions", 0, monotonicity},
    {"Chernoff evaluators", 0, chernoff},
    {"reports independent of worker count", 0, determinism},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    if (id < 1 || id > kCriterionCount) {
        throw std::out_of_range("run_criterion: unknown criterion " + std::to_string(id));
    }
    const Entry& e = kEntries[id - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = e.run(options);
    } catch (const std::exception& ex) {
        out = {false, std::string("exception: ") + ex.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_seconds > 0 && seconds > e.limit_seconds) {
        out.passed = false;
        out.detail += fmt("; took %.1f s, limit %.0f s", seconds, e.limit_seconds);
    }
    return CriterionResult{id, e.title, out.passed, out.detail, seconds};
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::span<const int> ids) {
    std::vector<int> all;
    if (ids.empty()) {
        for (int i = 1; i <= kCriterionCount; ++i) {
            all.push_back(i);
        }
        ids = all;
    }
    std::vector<CriterionResult> results;
    for (int id : ids) {
        results.push_back(run_criterion(id, options));
    }
    return results;
}

std::string format_result(const CriterionResult& r) {
    return fmt("%s  %2d  %s  (%.1f s)  %s", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
               r.detail.c_str());
}

}  // namespace tlea::harness
