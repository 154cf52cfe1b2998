#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "betasimplex/cli.hpp"
#include "betasimplex/errors.hpp"

using namespace betasimplex;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exact values") {
    const Outcome r = run({"exact", "s0", "--d", "3", "--beta", "-1", "--format", "json"});
    CHECK(r.code == cli::kSuccess);
    const RunReport report = report_from_json(r.out);
    REQUIRE(report.results.size() == 1);
    CHECK(std::abs(report.results[0].value - 0.125) < 1e-12);
    CHECK(report.results[0].abs_error.has_value());
    CHECK(report.parameters.at("beta") == "-1");
    CHECK(report.parameters.at("tol") == "1e-11");

    const Outcome table = run({"exact", "table", "--d", "4", "--beta", "0", "--format", "json"});
    CHECK(report_from_json(table.out).results.size() == 4);

    const Outcome facets = run({"exact", "facets", "--d", "2", "--n", "4", "--beta", "-0.5"});
    CHECK(facets.code == cli::kSuccess);
    CHECK(facets.out.find("3.75") != std::string::npos);
}

TEST_CASE("monte carlo subcommand") {
    const Outcome r = run({"mc", "s0-projection", "--d", "3", "--samples", "2000", "--seed", "5", "--format", "json"});
    CHECK(r.code == cli::kSuccess);
    const RunReport report = report_from_json(r.out);
    REQUIRE(report.results.size() == 2);
    CHECK(report.results[1].value == doctest::Approx(0.5 * report.results[0].value));
    CHECK(report.seed == 5u);
    CHECK(report.results[0].n_samples == 2000u);
    const Outcome threaded =
        run({"mc", "s0-projection", "--d", "3", "--samples", "2000", "--seed", "5", "--format", "json", "--workers", "3"});
    CHECK(report_from_json(threaded.out).results == report.results);
}

TEST_CASE("quick verification is fast and green") {
    const auto start = std::chrono::steady_clock::now();
    const Outcome r = run({"verify", "--suite", "paper", "--quick"});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.code == cli::kSuccess);
    CHECK(r.err.empty());
    CHECK(seconds < 5.0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"exact", "s0", "--beta", "-1.5"}).code == cli::kUsageError);
    CHECK(run({"exact", "s0", "--beta", "abc"}).code == cli::kUsageError);
    CHECK(run({"exact", "s0", "--d", "5"}).code == cli::kUsageError);
    CHECK(run({"exact", "volume"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"--format", "xml", "exact", "s0"}).code == cli::kUsageError);
    CHECK(run({"mc", "facets", "--d", "2", "--n", "2"}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kSuccess);

    const Outcome budget = run({"exact", "s0", "--tol", "1e-300"});
    CHECK(budget.code == cli::kNumericalFailure);
    CHECK(budget.err.find("best estimate") != std::string::npos);
}

TEST_CASE("json round trip") {
    RunReport report;
    report.command = "exact s0";
    report.parameters = {{"d", "3"}, {"beta", "0.25"}};
    report.results = {{"s0", 0.1234567890123456789, std::nullopt, 1e-13, std::nullopt, std::nullopt},
                      {"p", 0.3, 0.001, std::nullopt, 1000, 2}};
    report.checks = {{"c", true, 1.0, 1.0 + 1e-12, 1e-9}, {"d", false, 2.0, 3.0, 0.5}};
    report.seed = 17;
    CHECK(report_from_json(report_to_json(report)) == report);
    CHECK_FALSE(report.all_passed());
    report.duration_seconds = 1.5;
    CHECK(report_from_json(report_to_json(report)) == report);
}

TEST_CASE("csv layout") {
    const Outcome r = run({"--format", "csv", "exact", "table", "--d", "3"});
    CHECK(r.code == cli::kSuccess);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "section,name,value,std_error,abs_error,n_samples,rejected,expected,tolerance,passed");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) rows += line.rfind("result,", 0) == 0;
    CHECK(rows == 3);
}

TEST_CASE("output file") {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / "betasimplex_cli_test.json";
    const Outcome r = run({"--format", "json", "--out", path.string(), "exact", "s0"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const RunReport report = report_from_json(text.str());
    CHECK(report.command == "--format json exact s0");
    std::filesystem::remove(path);
}

TEST_CASE("timing is opt-in") {
    CHECK(run({"--format", "json", "exact", "s0"}).out.find("duration") == std::string::npos);
    CHECK(run({"--format", "json", "--timing", "exact", "s0"}).out.find("duration_seconds") != std::string::npos);
}

TEST_CASE("beta parsing") {
    CHECK(cli::parse_beta("-1").is_sphere());
    CHECK(cli::parse_beta("-1.000").is_sphere());
    CHECK(cli::parse_beta(" -1. ").is_sphere());
    CHECK(cli::parse_beta("0.5").value() == 0.5);
    CHECK(cli::parse_beta("+2").value() == 2.0);
    CHECK(cli::parse_beta("1e-3").value() == 0.001);
    CHECK_THROWS_AS(cli::parse_beta("-1.0001"), DomainError);
    CHECK_THROWS_AS(cli::parse_beta(""), DomainError);
    CHECK_THROWS_AS(cli::parse_beta("0.5x"), DomainError);
    CHECK_THROWS_AS(cli::parse_beta("nan"), DomainError);
}

TEST_CASE("worker count from the environment") {
    ::unsetenv(cli::kWorkersEnv);
    CHECK_FALSE(cli::workers_from_env().has_value());
    ::setenv(cli::kWorkersEnv, "3", 1);
    CHECK(cli::workers_from_env() == 3);
    ::setenv(cli::kWorkersEnv, "three", 1);
    CHECK_FALSE(cli::workers_from_env().has_value());
    ::setenv(cli::kWorkersEnv, "-2", 1);
    CHECK_FALSE(cli::workers_from_env().has_value());
    ::unsetenv(cli::kWorkersEnv);
}
