// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "betasimplex/angle_sums.hpp"
#include "betasimplex/beta_polytopes.hpp"
#include "betasimplex/core_math.hpp"
#include "betasimplex/errors.hpp"
#include "betasimplex/estimators.hpp"
#include "betasimplex/geometry.hpp"

using namespace betasimplex;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr std::uint64_t kSamples = 1'000'000;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Value within tol of expected, computed in under max_seconds.
Outcome timed_value(const std::function<double()>& f, double expected, double tol, double max_seconds) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const double value = f();
    const double elapsed = seconds_since(start);
    o.require(std::abs(value - expected) <= tol, "error " + num(std::abs(value - expected)));
    o.require(elapsed < max_seconds, "took " + num(elapsed) + " s");
    if (o.passed) o.detail = "error " + num(std::abs(value - expected)) + ", " + num(elapsed) + " s";
    return o;
}

void agree(Outcome& o, const std::string& name, const MCEstimate& e, double expected, double scale = 1.0) {
    const double z = std::abs(scale * e.mean - expected) / (scale * e.std_error);
    o.require(z <= 4.0, name + " off by " + num(z) + " SE");
}

std::vector<Simplex> fixed_tetrahedra() {
    Rng rng({20'240'001, 0});
    std::vector<Simplex> out;
    while (out.size() < 20) {
        std::vector<Vec> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(sample_beta_point(3, BetaParam(0.0), rng));
        try {
            out.emplace_back(std::move(pts));
        } catch (const DegenerateError&) {
        }
    }
    return out;
}

Outcome criterion_tables() {
    Outcome o;
    auto check = [&](const std::string& name, double value, double expected) {
        o.require(std::abs(value - expected) <= 1e-9, name + " error " + num(std::abs(value - expected)));
    };
    const AngleSumTable s3 = expected_angle_sum_table(3, BetaParam(-1.0));
    const AngleSumTable b3 = expected_angle_sum_table(3, BetaParam(0.0));
    const AngleSumTable s4 = expected_angle_sum_table(4, BetaParam(-1.0));
    const AngleSumTable b4 = expected_angle_sum_table(4, BetaParam(0.0));
    check("d3 sphere s1", s3.s[1], 9.0 / 8.0);
    check("d3 ball s1", b3.s[1], 2961.0 / 2560.0);
    check("d4 sphere s1", s4.s[1], 539.0 / (96.0 * kPi2));
    check("d4 sphere s2", s4.s[2], 5.0 / 3.0 + 539.0 / (144.0 * kPi2));
    check("d4 ball s1", b4.s[1], 1692197.0 / (282240.0 * kPi2));
    check("d4 ball s2", b4.s[2], 5.0 / 3.0 + 1692197.0 / (423360.0 * kPi2));
    if (o.passed) o.detail = "6 values within 1e-9";
    return o;
}

Outcome criterion_identities() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double beta : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
        const BetaParam b(beta);
        const double d3 = expected_s0_d3(b).value - (2.0 - 0.5 * expected_facets({4, 2, b.shifted(0.5)}).value);
        const double d4 = expected_s0_d4(b).value - (1.5 - 0.25 * expected_facets({5, 3, b.shifted(0.5)}).value);
        worst = std::max({worst, std::abs(d3), std::abs(d4)});
    }
    const double elapsed = seconds_since(start);
    o.require(worst <= 1e-9, "worst error " + num(worst));
    o.require(elapsed < 10.0, "took " + num(elapsed) + " s");
    if (o.passed) o.detail = "worst error " + num(worst) + ", " + num(elapsed) + " s";
    return o;
}

Outcome criterion_monte_carlo() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    McOptions options;
    for (int d : {3, 4}) {
        for (double beta : {-1.0, 0.0, 1.0}) {
            const BetaParam b(beta);
            const double exact = expected_s0(d, b).value;
            const std::string tag = "d=" + std::to_string(d) + " beta=" + num(beta);
            options.seed = 1000 + 10 * d + static_cast<std::uint64_t>(beta + 1.0);
            agree(o, "projection " + tag, mc_projection_simplex_prob(d, b, kSamples, options), exact, 0.5);
            options.seed += 500;
            agree(o, "direct " + tag, mc_angle_sum_direct(d, b, kSamples, 16, options), exact);
        }
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 300.0, "took " + num(elapsed) + " s");
    if (o.passed) o.detail = "12 estimates within 4 SE, " + num(elapsed) + " s";
    return o;
}

Outcome criterion_facets() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    struct Case {
        int n;
        int d;
        double beta;
    };
    McOptions options;
    options.seed = 2000;
    for (const Case& c : {Case{4, 2, -0.5}, Case{6, 2, 0.0}, Case{8, 2, 1.0}, Case{5, 3, -0.5}, Case{6, 3, 0.0}}) {
        const PolytopeSpec spec{c.n, c.d, BetaParam(c.beta)};
        ++options.seed;
        agree(o, "(" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + num(c.beta) + ")",
              mc_facet_count(spec, kSamples, options), expected_facets(spec).value);
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 300.0, "took " + num(elapsed) + " s");
    if (o.passed) o.detail = "5 cases within 4 SE, " + num(elapsed) + " s";
    return o;
}

Outcome criterion_geometry(const std::vector<Simplex>& tetrahedra) {
    Outcome o;
    const Simplex orthant3({Vec::Zero(3), Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)});
    const Simplex orthant4({Vec::Zero(4), Vec::Unit(4, 0), Vec::Unit(4, 1), Vec::Unit(4, 2), Vec::Unit(4, 3)});
    o.require(vertex_solid_angle_3d_exact(orthant3, 0) == 0.125, "exact d=3 orthant is not 1/8");
    Rng rng({3000, 0});
    agree(o, "d=4 orthant", vertex_solid_angle_mc(orthant4, 0, kSamples, rng), 1.0 / 16.0);
    double worst = 0.0;
    for (const Simplex& t : tetrahedra) {
        for (int i = 0; i < 4; ++i) {
            const MCEstimate mc = vertex_solid_angle_mc(t, i, 100'000, rng);
            worst = std::max(worst, std::abs(mc.mean - vertex_solid_angle_3d_exact(t, i)) / mc.std_error);
        }
    }
    o.require(worst <= 4.0, "tetrahedra worst " + num(worst) + " SE");
    if (o.passed) o.detail = "orthants ok, 80 vertex angles worst " + num(worst) + " SE";
    return o;
}

// c_{1,beta} int_{-1}^h (1 - x^2)^beta dx, with x = -1 + t^2 and x = 1 - t^2 on the two halves.
double cdf_by_quadrature(double beta, double h) {
    auto g = [beta](double t) { return 2.0 * std::pow(t, 2.0 * beta + 1.0) * std::pow(2.0 - t * t, beta); };
    double integral = 0.0;
    const double left_end = std::sqrt(1.0 + std::min(h, 0.0));
    if (left_end > 0.0) integral += integrate_adaptive(g, 0.0, left_end, 1e-13).value;
    if (h > 0.0 && std::sqrt(1.0 - h) < 1.0) integral += integrate_adaptive(g, std::sqrt(1.0 - h), 1.0, 1e-13).value;
    return std::exp(log_c(1, beta)) * integral;
}

Outcome criterion_special_functions() {
    Outcome o;
    double worst_cdf = 0.0;
    for (double beta : {-0.5, 0.0, 0.5, 1.0, 2.5})
        for (int k = 0; k <= 20; ++k) {
            const double h = -1.0 + 0.1 * k;
            worst_cdf = std::max(worst_cdf, std::abs(beta_cdf_1d(beta, h) - cdf_by_quadrature(beta, h)));
        }
    double worst_trig = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double phi = -0.5 * kPi + kPi * k / 49.0;
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        const double closed[4] = {
            1.0 + s,
            phi / 2.0 + kPi / 4.0 + 0.5 * c * s,
            -s * s * s / 12.0 + 0.75 * s + 0.25 * s * c * c + 2.0 / 3.0,
            3.0 * phi / 8.0 + 3.0 * kPi / 16.0 + 0.5 * c * s + c * c * c * s / 8.0 - c * s * s * s / 8.0,
        };
        for (int m = 1; m <= 4; ++m)
            worst_trig = std::max(worst_trig, std::abs(cos_power_integral(m, phi) - closed[m - 1]));
    }
    o.require(worst_cdf <= 1e-10, "cdf error " + num(worst_cdf));
    o.require(worst_trig <= 1e-12, "trig error " + num(worst_trig));
    if (o.passed) o.detail = "cdf error " + num(worst_cdf) + ", trig error " + num(worst_trig);
    return o;
}

Outcome criterion_feldman_klain(const std::vector<Simplex>& tetrahedra) {
    Outcome o;
    Rng rng({4000, 0});
    double worst = 0.0;
    for (const Simplex& t : tetrahedra) {
        double s0 = 0.0;
        for (int i = 0; i < 4; ++i) s0 += vertex_solid_angle_3d_exact(t, i);
        RunningStats stats;
        while (stats.count() < 100'000) {
            const Direction u = sample_unit_direction(3, rng);
            try {
                stats.add(classify_projection(project_onto_complement(t.vertices(), u)).is_simplex() ? 1.0 : 0.0);
            } catch (const DegenerateError&) {
                stats.reject();
            }
        }
        worst = std::max(worst, std::abs(stats.mean() - 2.0 * s0) / stats.std_error());
    }
    o.require(worst <= 4.0, "worst " + num(worst) + " SE");
    if (o.passed) o.detail = "worst " + num(worst) + " SE";
    return o;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

Outcome criterion_determinism() {
    Outcome o;
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::string reports[2];
    for (int run = 0; run < 2; ++run) {
        const std::filesystem::path out = dir / ("betasimplex_acceptance_" + std::to_string(run) + ".json");
        const std::string cmd = std::string("\"") + BETASIMPLEX_CLI + "\" verify --suite paper --seed 42 --format json --out \"" +
                                out.string() + "\"";
        const int status = std::system(cmd.c_str());
        o.require(status == 0, "run " + std::to_string(run + 1) + " exit status " + std::to_string(status));
        reports[run] = read_file(out);
        std::filesystem::remove(out);
    }
    o.require(!reports[0].empty(), "empty report");
    o.require(reports[0] == reports[1], "reports differ");
    if (o.passed) o.detail = std::to_string(reports[0].size()) + " identical bytes";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Simplex> tetrahedra;
    const std::vector<Criterion> criteria = {
        {"s0, d=3, sphere = 1/8",
         [] { return timed_value([] { return expected_s0_d3(BetaParam(-1.0)).value; }, 0.125, 1e-9, 1.0); }},
        {"s0, d=3, ball = 401/2560",
         [] { return timed_value([] { return expected_s0_d3(BetaParam(0.0)).value; }, 401.0 / 2560.0, 1e-9, 1.0); }},
        {"s0, d=4, sphere = 539/(288 pi^2) - 1/6",
         [] {
             return timed_value([] { return expected_s0_d4(BetaParam(-1.0)).value; },
                                539.0 / (288.0 * kPi2) - 1.0 / 6.0, 1e-9, 1.0);
         }},
        {"s0, d=4, ball = 1692197/(846720 pi^2) - 1/6",
         [] {
             return timed_value([] { return expected_s0_d4(BetaParam(0.0)).value; },
                                1692197.0 / (846720.0 * kPi2) - 1.0 / 6.0, 1e-9, 1.0);
         }},
        {"derived angle-sum tables", criterion_tables},
        {"facet identities", criterion_identities},
        {"Monte Carlo angle-sums", criterion_monte_carlo},
        {"Monte Carlo facet counts", criterion_facets},
        {"geometry oracles", [&] { return criterion_geometry(tetrahedra); }},
        {"special functions", criterion_special_functions},
        {"Feldman-Klain on 20 tetrahedra", [&] { return criterion_feldman_klain(tetrahedra); }},
        {"deterministic verify report", criterion_determinism},
    };
    tetrahedra = fixed_tetrahedra();

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.passed;
        std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].name << " ("
                  << o.detail << ")" << std::endl;
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
