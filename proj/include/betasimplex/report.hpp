#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace betasimplex {

struct ResultEntry {
    std::string name;
    double value = 0.0;
    std::optional<double> std_error;   // Monte Carlo
    std::optional<double> abs_error;   // quadrature
    std::optional<std::uint64_t> n_samples;
    std::optional<std::uint64_t> rejected;

    friend bool operator==(const ResultEntry&, const ResultEntry&) = default;
};

struct CheckEntry {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;

    friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

/// Everything a CLI run reports. duration_seconds is only filled on request
/// so that reports of seeded runs are byte-for-byte reproducible.
struct RunReport {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::vector<ResultEntry> results;
    std::vector<CheckEntry> checks;
    std::optional<std::uint64_t> seed;
    std::optional<double> duration_seconds;

    bool all_passed() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::json& j, const ResultEntry& entry);
void from_json(const nlohmann::json& j, ResultEntry& entry);
void to_json(nlohmann::json& j, const CheckEntry& entry);
void from_json(const nlohmann::json& j, CheckEntry& entry);
void to_json(nlohmann::json& j, const RunReport& report);
void from_json(const nlohmann::json& j, RunReport& report);

std::string report_to_json(const RunReport& report);
RunReport report_from_json(std::string_view text);

/// One row per result and per check. Columns, in order:
/// section,name,value,std_error,abs_error,n_samples,rejected,expected,tolerance,passed
/// section is "result" or "check"; fields that do not apply are empty.
std::string report_to_csv(const RunReport& report);

/// Aligned plain-text rendering for terminals.
std::string report_to_table(const RunReport& report);

}  // namespace betasimplex
