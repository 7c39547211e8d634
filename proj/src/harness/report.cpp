#include "tlea/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tlea::harness {

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

double parse_real(const std::string& s) {
    if (s == "nan" || s == "-nan") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument(s);
    }
    return v;
}

std::uint64_t parse_uint(const std::string& s) {
    if (s.empty() || s[0] == '-') {
        throw std::invalid_argument(s);
    }
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument(s);
    }
    return v;
}

nlohmann::json real_json(double v) {
    return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(parse_real(format_real(v)));
}

double json_real(const nlohmann::json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    return std::nullopt;
}

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

double as_written(double v) {
    return std::strtod(format_real(v).c_str(), nullptr);
}

}  // namespace

ReportRow to_row(const PointReport& p) {
    ReportRow r;
    r.algorithm = std::string(to_string(p.algorithm));
    r.n = p.n;
    r.mu = p.mu;
    r.trials = p.trials;
    r.opt_count = p.count(OutcomeKind::OptimumFound);
    r.eventI_count = p.count(OutcomeKind::StagnatedEventI);
    r.eventII_count = p.count(OutcomeKind::StagnatedEventII);
    r.budget_count = p.count(OutcomeKind::BudgetExhausted);
    r.success_rate = as_written(p.success_rate);
    r.wilson95_lo = as_written(p.success95.low);
    r.wilson95_hi = as_written(p.success95.high);
    r.cond_mean_gens = as_written(p.cond_mean_gens);
    r.cond_var_gens = as_written(p.cond_var_gens);
    r.theorem_bound = as_written(p.theorem_bound);
    r.seed = p.seed;
    return r;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.algorithm << ',' << r.n << ',' << r.mu << ',' << r.trials << ',' << r.opt_count << ','
            << r.eventI_count << ',' << r.eventII_count << ',' << r.budget_count << ',' << format_real(r.success_rate)
            << ',' << format_real(r.wilson95_lo) << ',' << format_real(r.wilson95_hi) << ','
            << format_real(r.cond_mean_gens) << ',' << format_real(r.cond_var_gens) << ','
            << format_real(r.theorem_bound) << ',' << r.seed << '\n';
    }
    return out.str();
}

std::string to_csv(const ExperimentReport& report) {
    std::vector<ReportRow> rows;
    rows.reserve(report.points.size());
    for (const auto& p : report.points) {
        rows.push_back(to_row(p));
    }
    return to_csv(rows);
}

nlohmann::json to_json(const ExperimentReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : report.points) {
        const ReportRow r = to_row(p);
        nlohmann::json j;
        j["algorithm"] = r.algorithm;
        j["n"] = r.n;
        j["mu"] = r.mu;
        j["trials"] = r.trials;
        j["opt_count"] = r.opt_count;
        j["eventI_count"] = r.eventI_count;
        j["eventII_count"] = r.eventII_count;
        j["budget_count"] = r.budget_count;
        j["success_rate"] = real_json(r.success_rate);
        j["wilson95_lo"] = real_json(r.wilson95_lo);
        j["wilson95_hi"] = real_json(r.wilson95_hi);
        j["cond_mean_gens"] = real_json(r.cond_mean_gens);
        j["cond_var_gens"] = real_json(r.cond_var_gens);
        j["theorem_bound"] = real_json(r.theorem_bound);
        j["seed"] = r.seed;
        rows.push_back(std::move(j));
    }
    return nlohmann::json{{"config", config_to_json(report.config)}, {"rows", rows}};
}

std::vector<ReportRow> rows_from_json(const nlohmann::json& j) {
    std::vector<ReportRow> rows;
    for (const auto& e : j.at("rows")) {
        ReportRow r;
        r.algorithm = e.at("algorithm").get<std::string>();
        r.n = e.at("n").get<std::size_t>();
        r.mu = e.at("mu").get<std::size_t>();
        r.trials = e.at("trials").get<std::size_t>();
        r.opt_count = e.at("opt_count").get<std::size_t>();
        r.eventI_count = e.at("eventI_count").get<std::size_t>();
        r.eventII_count = e.at("eventII_count").get<std::size_t>();
        r.budget_count = e.at("budget_count").get<std::size_t>();
        r.success_rate = json_real(e.at("success_rate"));
        r.wilson95_lo = json_real(e.at("wilson95_lo"));
        r.wilson95_hi = json_real(e.at("wilson95_hi"));
        r.cond_mean_gens = json_real(e.at("cond_mean_gens"));
        r.cond_var_gens = json_real(e.at("cond_var_gens"));
        r.theorem_bound = json_real(e.at("theorem_bound"));
        r.seed = e.at("seed").get<std::uint64_t>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ReportRow> parse_csv(std::string_view text) {
    std::vector<ReportRow> rows;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw std::runtime_error("parse_csv: unexpected header");
            }
            header_seen = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 15) {
            throw std::runtime_error("parse_csv: line " + std::to_string(line_no) + ": expected 15 fields");
        }
        try {
            ReportRow r;
            r.algorithm = f[0];
            r.n = parse_uint(f[1]);
            r.mu = parse_uint(f[2]);
            r.trials = parse_uint(f[3]);
            r.opt_count = parse_uint(f[4]);
            r.eventI_count = parse_uint(f[5]);
            r.eventII_count = parse_uint(f[6]);
            r.budget_count = parse_uint(f[7]);
            r.success_rate = parse_real(f[8]);
            r.wilson95_lo = parse_real(f[9]);
            r.wilson95_hi = parse_real(f[10]);
            r.cond_mean_gens = parse_real(f[11]);
            r.cond_var_gens = parse_real(f[12]);
            r.theorem_bound = parse_real(f[13]);
            r.seed = parse_uint(f[14]);
            rows.push_back(std::move(r));
        } catch (const std::logic_error& e) {
            throw std::runtime_error("parse_csv: line " + std::to_string(line_no) + ": bad value " + e.what());
        }
    }
    if (!header_seen) {
        throw std::runtime_error("parse_csv: missing header");
    }
    return rows;
}

void write_report(const ExperimentReport& report, const std::string& path, ReportFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("write_report: cannot open " + path);
    }
    if (format == ReportFormat::Csv) {
        out << to_csv(report);
    } else {
        out << to_json(report).dump(2) << '\n';
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("write_report: write failed for " + path);
    }
}

}  // namespace tlea::harness
