#ifndef TLEA_HARNESS_REPORT_HPP
#define TLEA_HARNESS_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tlea/harness/experiment.hpp"

namespace tlea::harness {

enum class ReportFormat { Csv, Json };

std::optional<ReportFormat> parse_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "algorithm,n,mu,trials,opt_count,eventI_count,eventII_count,budget_count,success_rate,"
    "wilson95_lo,wilson95_hi,cond_mean_gens,cond_var_gens,theorem_bound,seed";

/// One CSV line as values. Reals hold what was written (6 significant digits).
struct ReportRow {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t mu = 0;
    std::size_t trials = 0;
    std::size_t opt_count = 0;
    std::size_t eventI_count = 0;
    std::size_t eventII_count = 0;
    std::size_t budget_count = 0;
    double success_rate = 0;
    double wilson95_lo = 0;
    double wilson95_hi = 0;
    double cond_mean_gens = 0;
    double cond_var_gens = 0;
    double theorem_bound = 0;
    std::uint64_t seed = 0;
};

ReportRow to_row(const PointReport& p);

/// "%.6g"; NaN prints as "nan".
std::string format_real(double v);

std::string to_csv(const ExperimentReport& report);
std::string to_csv(const std::vector<ReportRow>& rows);
nlohmann::json to_json(const ExperimentReport& report);

/// Parses CSV produced by to_csv. Throws std::runtime_error on a bad header
/// or malformed line.
std::vector<ReportRow> parse_csv(std::string_view text);
std::vector<ReportRow> rows_from_json(const nlohmann::json& j);

/// Writes the report; throws std::runtime_error naming `path` on I/O failure.
void write_report(const ExperimentReport& report, const std::string& path, ReportFormat format);

}  // namespace tlea::harness

#endif  // TLEA_HARNESS_REPORT_HPP
