#include "betasimplex/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <regex>

#include "CLI11.hpp"

#include "betasimplex/beta_polytopes.hpp"
#include "betasimplex/errors.hpp"
#include "betasimplex/estimators.hpp"
#include "betasimplex/verify.hpp"

namespace betasimplex::cli {

namespace {

// Shortest representation that parses back to the same double.
std::string fmt_double(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

// Command echo; the output destination is left out so that reports written
// to different files compare equal.
std::string echo_command(const std::vector<std::string>& args) {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--out") {
            ++i;
            continue;
        }
        if (args[i].rfind("--out=", 0) == 0) continue;
        if (!out.empty()) out += ' ';
        out += args[i];
    }
    return out;
}

struct OutputOptions {
    std::string format = "human";
    std::string path;
    bool timing = false;
};

std::string render(const RunReport& report, const std::string& format) {
    if (format == "json") return report_to_json(report);
    if (format == "csv") return report_to_csv(report);
    return report_to_table(report);
}

void emit(const RunReport& report, const OutputOptions& output, std::ostream& out) {
    const std::string text = render(report, output.format);
    if (output.path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output.path, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot open output file: " + output.path);
    file << text;
}

struct ExactArgs {
    std::string subject;
    int d = 3;
    std::string beta = "0";
    int n = 0;
    double tol = kDefaultTolerance;
};

struct McArgs {
    std::string subject;
    int d = 3;
    std::string beta = "0";
    int n = 0;
    std::uint64_t samples = 1'000'000;
    std::uint64_t dirs_per_vertex = 1000;
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t chunks = kDefaultChunks;
    int workers = -1;
};

struct VerifyArgs {
    std::string suite = "paper";
    bool quick = false;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t samples = 1'000'000;
    int workers = -1;
    double tol = kDefaultTolerance;
};

int resolve_workers(int flag) {
    if (flag >= 0) return flag;
    return workers_from_env().value_or(0);
}

RunReport cmd_exact(const ExactArgs& args) {
    const BetaParam beta = parse_beta(args.beta);
    RunReport report;
    report.parameters = {{"subject", args.subject}, {"d", std::to_string(args.d)},
                         {"beta", fmt_double(beta.value())}, {"tol", fmt_double(args.tol)}};

    if (args.subject == "s0") {
        const QuadratureResult s0 = expected_s0(args.d, beta, args.tol);
        report.results.push_back({"s0", s0.value, std::nullopt, s0.abs_error_estimate, std::nullopt, std::nullopt});
    } else if (args.subject == "table") {
        const AngleSumTable table = expected_angle_sum_table(args.d, beta, args.tol);
        for (std::size_t k = 0; k < table.s.size(); ++k) {
            report.results.push_back({"s" + std::to_string(k), table.s[k], std::nullopt, table.abs_error_estimate,
                                      std::nullopt, std::nullopt});
        }
    } else {
        report.parameters["n"] = std::to_string(args.n);
        const QuadratureResult facets = expected_facets({args.n, args.d, beta}, args.tol);
        report.results.push_back(
            {"facets", facets.value, std::nullopt, facets.abs_error_estimate, std::nullopt, std::nullopt});
    }
    return report;
}

RunReport cmd_mc(const McArgs& args) {
    const BetaParam beta = parse_beta(args.beta);
    McOptions options;
    options.seed = args.seed;
    options.chunks = args.chunks;
    options.workers = resolve_workers(args.workers);

    RunReport report;
    report.seed = args.seed;
    report.parameters = {{"subject", args.subject},
                         {"d", std::to_string(args.d)},
                         {"beta", fmt_double(beta.value())},
                         {"samples", std::to_string(args.samples)},
                         {"chunks", std::to_string(args.chunks)}};

    auto entry = [](std::string name, const MCEstimate& e, double scale = 1.0) {
        return ResultEntry{std::move(name), scale * e.mean, scale * e.std_error, std::nullopt, e.n_samples, e.rejected};
    };

    if (args.subject == "s0-direct") {
        if (args.d == 4) report.parameters["dirs_per_vertex"] = std::to_string(args.dirs_per_vertex);
        report.results.push_back(
            entry("s0", mc_angle_sum_direct(args.d, beta, args.samples, args.dirs_per_vertex, options)));
    } else if (args.subject == "s0-projection") {
        const MCEstimate p = mc_projection_simplex_prob(args.d, beta, args.samples, options);
        report.results.push_back(entry("p_simplex", p));
        report.results.push_back(entry("s0", p, 0.5));
    } else {
        report.parameters["n"] = std::to_string(args.n);
        report.results.push_back(entry("facets", mc_facet_count({args.n, args.d, beta}, args.samples, options)));
    }
    return report;
}

RunReport cmd_verify(const VerifyArgs& args) {
    VerifyOptions options;
    options.seed = args.seed;
    options.quick = args.quick;
    options.samples = args.samples;
    options.workers = resolve_workers(args.workers);
    options.tolerance = args.tol;
    RunReport report = run_reference_suite(options);
    report.parameters = {{"suite", args.suite},
                         {"quick", args.quick ? "true" : "false"},
                         {"samples", std::to_string(args.samples)},
                         {"tol", fmt_double(args.tol)}};
    return report;
}

}  // namespace

BetaParam parse_beta(std::string_view text) {
    static const std::regex sphere(R"(\s*-1(\.0*)?\s*)");
    const std::string s(text);
    if (std::regex_match(s, sphere)) return BetaParam(-1.0);

    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw DomainError("beta: empty value");
    const char* begin = s.data() + first;
    const char* end = s.data() + last + 1;
    if (*begin == '+') ++begin;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw DomainError("beta: not a decimal number: " + s);
    return BetaParam(value);
}

std::optional<int> workers_from_env() {
    const char* raw = std::getenv(kWorkersEnv);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    int value = 0;
    const char* end = raw + std::char_traits<char>::length(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end || value < 0) return std::nullopt;
    return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Expected angle-sums of random beta simplices in dimensions 3 and 4", "betasimplex"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions output;
    app.add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", output.path, "Write the report to this file instead of stdout");
    app.add_flag("--timing", output.timing, "Include the wall-clock duration in the report");

    ExactArgs exact_args;
    CLI::App* exact = app.add_subcommand("exact", "Quadrature values: s0, the angle-sum table, or facet counts");
    exact->add_option("subject", exact_args.subject)->required()->check(CLI::IsMember({"s0", "table", "facets"}));
    exact->add_option("--d", exact_args.d, "Dimension (3 or 4; 2+ for facets)")->capture_default_str();
    exact->add_option("--beta", exact_args.beta, "Beta parameter, >= -1 (-1 = sphere)")->capture_default_str();
    exact->add_option("--n", exact_args.n, "Number of points (facets only)");
    exact->add_option("--tol", exact_args.tol, "Absolute quadrature tolerance")->capture_default_str();

    McArgs mc_args;
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimates");
    mc->add_option("subject", mc_args.subject)
        ->required()
        ->check(CLI::IsMember({"s0-direct", "s0-projection", "facets"}));
    mc->add_option("--d", mc_args.d, "Dimension")->capture_default_str();
    mc->add_option("--beta", mc_args.beta, "Beta parameter, >= -1 (-1 = sphere)")->capture_default_str();
    mc->add_option("--n", mc_args.n, "Number of points (facets only)");
    mc->add_option("--samples", mc_args.samples, "Number of samples")->capture_default_str();
    mc->add_option("--dirs-per-vertex", mc_args.dirs_per_vertex, "Directions per vertex (s0-direct, d = 4)")
        ->capture_default_str();
    mc->add_option("--seed", mc_args.seed, "Run seed")->capture_default_str();
    mc->add_option("--chunks", mc_args.chunks, "Independent random streams")->capture_default_str();
    mc->add_option("--workers", mc_args.workers, "OpenMP threads (0 = default)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Check the reference values and identities");
    verify->add_option("--suite", verify_args.suite)->check(CLI::IsMember({"paper"}))->capture_default_str();
    verify->add_flag("--quick", verify_args.quick, "Quadrature checks only");
    verify->add_option("--seed", verify_args.seed, "Run seed")->capture_default_str();
    verify->add_option("--samples", verify_args.samples, "Monte Carlo samples per check")->capture_default_str();
    verify->add_option("--workers", verify_args.workers, "OpenMP threads (0 = default)");
    verify->add_option("--tol", verify_args.tol, "Absolute quadrature tolerance")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        RunReport report;
        if (exact->parsed()) report = cmd_exact(exact_args);
        else if (mc->parsed()) report = cmd_mc(mc_args);
        else report = cmd_verify(verify_args);
        report.command = echo_command(args);
        if (output.timing) {
            report.duration_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        emit(report, output, out);

        if (!report.all_passed()) {
            for (const CheckEntry& c : report.checks)
                if (!c.passed) err << "FAILED: " << c.name << '\n';
            return kVerificationFailed;
        }
        return kSuccess;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const QuadratureError& e) {
        err << "numerical failure: " << e.what() << " (best estimate " << fmt_double(e.best_estimate().value)
            << ", error estimate " << fmt_double(e.best_estimate().abs_error_estimate) << ")\n";
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace betasimplex::cli
