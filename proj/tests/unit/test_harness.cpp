#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tlea/harness/config.hpp"
#include "tlea/harness/experiment.hpp"
#include "tlea/harness/report.hpp"
#include "tlea/harness/scaling.hpp"
#include "tlea/oracle/bounds.hpp"

using namespace tlea;
using namespace tlea::harness;

namespace {

ExperimentConfig small_config(Algorithm alg) {
    ExperimentConfig c;
    c.algorithm = alg;
    c.n_values = {6, 9};
    c.mu.values = {3};
    c.trials = 60;
    c.seed = 99;
    c.threads = 1;
    return c;
}

bool has_issue(const std::vector<std::string>& issues, const std::string& prefix) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("config validation names fields") {
    ExperimentConfig c;
    c.n_values = {1};
    c.trials = 0;
    c.budget_multiplier = -2;
    const auto issues = config_issues(c);
    CHECK(has_issue(issues, "n:"));
    CHECK(has_issue(issues, "trials:"));
    CHECK(has_issue(issues, "budget_mult:"));
    CHECK_THROWS_AS(validate(c), ConfigError);
    CHECK_THROWS_AS(run_experiment(c), ConfigError);

    ExperimentConfig empty;
    CHECK(has_issue(config_issues(empty), "n:"));

    ExperimentConfig mu = small_config(Algorithm::MuEA);
    mu.mu.values = {0};
    CHECK(has_issue(config_issues(mu), "mu:"));
    mu.mu.values = {};
    CHECK(has_issue(config_issues(mu), "mu:"));

    CHECK(config_issues(small_config(Algorithm::OEA)).empty());
}

TEST_CASE("config from json") {
    const auto j = nlohmann::json::parse(
        R"({"algorithm": "MuEA", "n": [10, 20], "mu": "theorem", "delta": 0.5, "trials": 7,
            "budget_mult": 2.5, "seed": 11, "early_exit": false, "threads": 3})");
    const ExperimentConfig c = config_from_json(j);
    CHECK(c.algorithm == Algorithm::MuEA);
    CHECK(c.n_values == std::vector<std::size_t>{10, 20});
    CHECK(c.mu.kind == MuRule::Kind::TheoremMinimum);
    CHECK(c.mu.delta == 0.5);
    CHECK(c.trials == 7);
    CHECK(c.budget_multiplier == 2.5);
    CHECK(c.seed == 11);
    CHECK_FALSE(c.early_exit);
    CHECK(c.threads == 3);
    CHECK(resolve_mu(c, 20) == std::vector<std::size_t>{oracle::min_population(20, 0.5)});

    const ExperimentConfig back = config_from_json(config_to_json(c));
    CHECK(back.n_values == c.n_values);
    CHECK(back.mu.kind == c.mu.kind);
    CHECK(back.seed == c.seed);

    try {
        (void)config_from_json(nlohmann::json::parse(R"({"n": [5], "trails": 4, "algorithm": "GA"})"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(has_issue(e.issues(), "trails:"));
        CHECK(has_issue(e.issues(), "algorithm:"));
    }
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"trials": -1})")), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/dir/config.json"), ConfigError);

    ExperimentConfig single = small_config(Algorithm::RLS);
    single.mu.values = {5, 6};
    CHECK(resolve_mu(single, 6) == std::vector<std::size_t>{1});
}

TEST_CASE("outcome counts partition the trials") {
    for (Algorithm alg : {Algorithm::RLS, Algorithm::OEA, Algorithm::MuEA, Algorithm::Online}) {
        ExperimentConfig c = small_config(alg);
        if (alg == Algorithm::Online) {
            c.budget_multiplier = 0.05;
        }
        const ExperimentReport r = run_experiment(c);
        REQUIRE(r.points.size() == 2);
        for (const auto& p : r.points) {
            std::size_t total = 0;
            for (std::size_t k : p.counts) {
                total += k;
            }
            CHECK(total == c.trials);
            CHECK(p.failed == 0);
            CHECK(p.success95.contains(p.success_rate));
            CHECK(p.failure_rate == doctest::Approx((p.count(OutcomeKind::StagnatedEventI) +
                                                     p.count(OutcomeKind::StagnatedEventII)) /
                                                    static_cast<double>(c.trials)));
            CHECK(p.seed == c.seed);
            CHECK(p.budget == trial_budget(alg, p.n, p.mu, c.budget_multiplier));
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    ExperimentConfig c = small_config(Algorithm::MuEA);
    c.trials = 40;
    const std::string one = to_csv(run_experiment(c));
    c.threads = 4;
    const std::string four = to_csv(run_experiment(c));
    CHECK(one == four);
    c.seed = 100;
    CHECK(to_csv(run_experiment(c)) != one);
}

TEST_CASE("indexed runner keeps order and records failures") {
    std::vector<bool> threw;
    const auto out = run_indexed(
        20, 3,
        [](std::size_t i) {
            if (i % 7 == 3) {
                throw std::runtime_error("boom");
            }
            return TrialOutcome{OutcomeKind::OptimumFound, i};
        },
        &threw);
    REQUIRE(out.size() == 20);
    for (std::size_t i = 0; i < 20; ++i) {
        if (i % 7 == 3) {
            CHECK(threw[i]);
            CHECK(out[i].kind == OutcomeKind::BudgetExhausted);
        } else {
            CHECK_FALSE(threw[i]);
            CHECK(out[i].generation == i);
        }
    }
    const PointReport p = summarize(Algorithm::OEA, 5, 1, 1, 10, out, 3, 1e-9);
    CHECK(p.failed == 3);
    CHECK(p.count(OutcomeKind::BudgetExhausted) == 3);
    CHECK(p.count(OutcomeKind::OptimumFound) == 17);
}

TEST_CASE("summary statistics") {
    const std::vector<TrialOutcome> outs{{OutcomeKind::OptimumFound, 4},
                                         {OutcomeKind::OptimumFound, 8},
                                         {OutcomeKind::StagnatedEventI, 100},
                                         {OutcomeKind::StagnatedEventII, 0}};
    const PointReport p = summarize(Algorithm::RLS, 10, 1, 5, 1000, outs, 0, 1e-9);
    CHECK(p.success_rate == 0.5);
    CHECK(p.failure_rate == 0.5);
    CHECK(p.cond_mean_gens == 6.0);
    CHECK(p.cond_var_gens == 8.0);
    CHECK(p.excluded_fraction == 0.5);
    CHECK(p.theorem_bound == oracle::theorem1_bound(10).value);

    const std::vector<TrialOutcome> none{{OutcomeKind::StagnatedEventI, 1}};
    const PointReport q = summarize(Algorithm::MuEA, 10, 50, 5, 1000, none, 0, 1e-9);
    CHECK(std::isnan(q.cond_mean_gens));
    CHECK(to_csv(ExperimentReport{{}, {q}}).find(",nan,nan,") != std::string::npos);
}

TEST_CASE("csv and json round trip") {
    ExperimentConfig c = small_config(Algorithm::OEA);
    const ExperimentReport r = run_experiment(c);
    const std::string csv = to_csv(r);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    CHECK(csv.find(std::string(kCsvHeader), 1) == std::string::npos);

    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == r.points.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow expect = to_row(r.points[i]);
        CHECK(rows[i].algorithm == "OEA");
        CHECK(rows[i].n == expect.n);
        CHECK(rows[i].opt_count == expect.opt_count);
        CHECK(rows[i].eventI_count == expect.eventI_count);
        CHECK(rows[i].success_rate == expect.success_rate);
        CHECK(rows[i].seed == c.seed);
    }
    CHECK(to_csv(rows) == csv);

    const auto j = to_json(r);
    CHECK(j.contains("config"));
    const auto jrows = rows_from_json(j);
    REQUIRE(jrows.size() == rows.size());
    CHECK(to_csv(jrows) == csv);

    CHECK_THROWS_AS(parse_csv("n,mu\n1,2\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_csv(std::string(kCsvHeader) + "\nOEA,5\n"), std::runtime_error);
}

TEST_CASE("report output errors name the path") {
    const ExperimentReport r = run_experiment(small_config(Algorithm::RLS));
    const std::string bad = "/nonexistent/dir/out.csv";
    try {
        write_report(r, bad, ReportFormat::Csv);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(bad) != std::string::npos);
    }
    const auto path = std::filesystem::temp_directory_path() / "tlea_report_test.json";
    write_report(r, path.string(), ReportFormat::Json);
    CHECK(std::filesystem::file_size(path) > 0);
    std::filesystem::remove(path);
}

TEST_CASE("scaling check") {
    ExperimentConfig c = small_config(Algorithm::MuEA);
    c.n_values = {6};
    CHECK_THROWS_AS(runtime_scaling_check(run_experiment(c)), std::invalid_argument);

    PointReport a{};
    a.n = 10;
    a.mu = 5;
    a.counts[0] = 10;
    a.cond_mean_gens = 100;
    PointReport b = a;
    b.n = 20;
    b.cond_mean_gens = 150;
    ExperimentReport r{{}, {a, b}};
    ScalingTable t = runtime_scaling_check(r);
    CHECK(t.ok());
    CHECK(t.spread == doctest::Approx(4.0 / 3.0));
    CHECK(*t.rows[0].ratio == doctest::Approx(2.0));

    r.points[1].cond_mean_gens = 500;
    t = runtime_scaling_check(r);
    CHECK(t.spread_flagged);
    CHECK_FALSE(t.ok());

    r.points[1].counts[0] = 1;
    t = runtime_scaling_check(r);
    CHECK(t.insufficient_flagged);
    CHECK_FALSE(t.rows[1].ratio.has_value());
}

TEST_CASE("format parsing and algorithm names") {
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK(parse_format("json") == ReportFormat::Json);
    CHECK_FALSE(parse_format("xml").has_value());
    for (Algorithm a : {Algorithm::RLS, Algorithm::OEA, Algorithm::MuEA, Algorithm::Online}) {
        CHECK(parse_algorithm(to_string(a)) == a);
    }
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(std::nan("")) == "nan");
    CHECK(format_real(1234567.0) == "1.23457e+06");
}
