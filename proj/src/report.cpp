#include "betasimplex/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <type_traits>

namespace betasimplex {

namespace {

std::string fmt_double(double x, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& value) {
    if (value) j[key] = *value;
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& value) {
    const auto it = j.find(key);
    value = (it != j.end() && !it->is_null()) ? std::optional<T>(it->template get<T>()) : std::nullopt;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace

bool RunReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

void to_json(nlohmann::json& j, const ResultEntry& entry) {
    j = nlohmann::json{{"name", entry.name}, {"value", entry.value}};
    put_optional(j, "std_error", entry.std_error);
    put_optional(j, "abs_error", entry.abs_error);
    put_optional(j, "n_samples", entry.n_samples);
    put_optional(j, "rejected", entry.rejected);
}

void from_json(const nlohmann::json& j, ResultEntry& entry) {
    j.at("name").get_to(entry.name);
    j.at("value").get_to(entry.value);
    get_optional(j, "std_error", entry.std_error);
    get_optional(j, "abs_error", entry.abs_error);
    get_optional(j, "n_samples", entry.n_samples);
    get_optional(j, "rejected", entry.rejected);
}

void to_json(nlohmann::json& j, const CheckEntry& entry) {
    j = nlohmann::json{{"name", entry.name},
                       {"passed", entry.passed},
                       {"observed", entry.observed},
                       {"expected", entry.expected},
                       {"tolerance", entry.tolerance}};
}

void from_json(const nlohmann::json& j, CheckEntry& entry) {
    j.at("name").get_to(entry.name);
    j.at("passed").get_to(entry.passed);
    j.at("observed").get_to(entry.observed);
    j.at("expected").get_to(entry.expected);
    j.at("tolerance").get_to(entry.tolerance);
}

void to_json(nlohmann::json& j, const RunReport& report) {
    j = nlohmann::json{{"command", report.command},
                       {"parameters", report.parameters},
                       {"results", report.results},
                       {"checks", report.checks}};
    put_optional(j, "seed", report.seed);
    put_optional(j, "duration_seconds", report.duration_seconds);
}

void from_json(const nlohmann::json& j, RunReport& report) {
    j.at("command").get_to(report.command);
    j.at("parameters").get_to(report.parameters);
    j.at("results").get_to(report.results);
    j.at("checks").get_to(report.checks);
    get_optional(j, "seed", report.seed);
    get_optional(j, "duration_seconds", report.duration_seconds);
}

std::string report_to_json(const RunReport& report) { return nlohmann::json(report).dump(2) + "\n"; }

RunReport report_from_json(std::string_view text) { return nlohmann::json::parse(text).get<RunReport>(); }

std::string report_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "section,name,value,std_error,abs_error,n_samples,rejected,expected,tolerance,passed\n";
    auto opt = [](const auto& value) -> std::string {
        if (!value) return "";
        if constexpr (std::is_same_v<std::decay_t<decltype(*value)>, double>) return fmt_double(*value);
        else return std::to_string(*value);
    };
    for (const ResultEntry& r : report.results) {
        out << "result," << r.name << ',' << fmt_double(r.value) << ',' << opt(r.std_error) << ','
            << opt(r.abs_error) << ',' << opt(r.n_samples) << ',' << opt(r.rejected) << ",,,\n";
    }
    for (const CheckEntry& c : report.checks) {
        out << "check," << c.name << ',' << fmt_double(c.observed) << ",,,,," << fmt_double(c.expected) << ','
            << fmt_double(c.tolerance) << ',' << (c.passed ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string report_to_table(const RunReport& report) {
    std::ostringstream out;
    out << "command: " << report.command << '\n';
    if (report.seed) out << "seed:    " << *report.seed << '\n';

    if (!report.results.empty()) {
        std::size_t width = 4;
        for (const ResultEntry& r : report.results) width = std::max(width, r.name.size());
        out << '\n';
        for (const ResultEntry& r : report.results) {
            out << "  " << pad(r.name, width) << "  " << pad(fmt_double(r.value, 15), 22);
            if (r.std_error) out << "  +/- " << fmt_double(*r.std_error, 3) << " (1 SE)";
            if (r.abs_error) out << "  quadrature error <= " << fmt_double(*r.abs_error, 3);
            if (r.n_samples) out << "  n=" << *r.n_samples;
            if (r.rejected) out << "  rejected=" << *r.rejected;
            out << '\n';
        }
    }

    if (!report.checks.empty()) {
        std::size_t width = 5;
        for (const CheckEntry& c : report.checks) width = std::max(width, c.name.size());
        std::size_t failed = 0;
        out << "\n  " << pad("check", width) << "  result  " << pad("observed", 22) << pad("expected", 22)
            << "tolerance\n";
        for (const CheckEntry& c : report.checks) {
            failed += c.passed ? 0 : 1;
            out << "  " << pad(c.name, width) << "  " << (c.passed ? "PASS  " : "FAIL  ") << "  "
                << pad(fmt_double(c.observed, 15), 22) << pad(fmt_double(c.expected, 15), 22)
                << fmt_double(c.tolerance, 3) << '\n';
        }
        out << '\n' << (report.checks.size() - failed) << '/' << report.checks.size() << " checks passed\n";
    }
    if (report.duration_seconds) out << "duration: " << fmt_double(*report.duration_seconds, 4) << " s\n";
    return out.str();
}

}  // namespace betasimplex
