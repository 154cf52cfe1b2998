#include "betasimplex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "betasimplex/angle_sums.hpp"
#include "betasimplex/beta_polytopes.hpp"
#include "betasimplex/errors.hpp"
#include "betasimplex/geometry.hpp"

namespace betasimplex {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExactTol = 1e-9;
constexpr double kSigmas = 4.0;
constexpr std::uint64_t kDirectionsPerTetrahedron = 100'000;
constexpr int kTetrahedra = 20;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string fmt_beta(double beta) {
    std::string s = std::to_string(beta);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(const VerifyOptions& options) : options_(options) {}

    void exact(const std::string& name, double observed, double expected, double tol = kExactTol) {
        report_.checks.push_back({name, std::abs(observed - expected) <= tol, observed, expected, tol});
    }

    void monte_carlo(const std::string& name, const MCEstimate& estimate, double expected, double scale = 1.0) {
        const double mean = scale * estimate.mean;
        const double se = scale * estimate.std_error;
        report_.results.push_back({name, mean, se, std::nullopt, estimate.n_samples, estimate.rejected});
        report_.checks.push_back({name, std::abs(mean - expected) <= kSigmas * se, mean, expected, kSigmas * se});
    }

    /// Largest |z| over a family of Monte Carlo comparisons, passing below 4.
    void max_z(const std::string& name, double z) {
        report_.checks.push_back({name, z <= kSigmas, z, 0.0, kSigmas});
    }

    McOptions mc() {
        McOptions o;
        o.seed = next_seed();
        o.workers = options_.workers;
        return o;
    }

    std::uint64_t next_seed() { return splitmix64(options_.seed ^ splitmix64(++streams_)); }

    RunReport take() { return std::move(report_); }

private:
    const VerifyOptions& options_;
    RunReport report_;
    std::uint64_t streams_ = 0;
};

// c_{1,beta} * int_{-1}^{h} (1 - x^2)^beta dx, with x = -1 + t^2 on [-1, 0] and
// x = 1 - t^2 on [0, 1] so that both halves have bounded integrands.
double beta_cdf_by_quadrature(double beta, double h) {
    auto g = [beta](double t) { return 2.0 * std::pow(t, 2.0 * beta + 1.0) * std::pow(2.0 - t * t, beta); };
    double integral = 0.0;
    const double left_end = std::sqrt(1.0 + std::min(h, 0.0));
    if (left_end > 0.0) integral += integrate_adaptive(g, 0.0, left_end, 1e-13).value;
    if (h > 0.0) {
        const double lower = std::sqrt(1.0 - h);
        if (lower < 1.0) integral += integrate_adaptive(g, lower, 1.0, 1e-13).value;
    }
    return std::exp(log_c(1, beta)) * integral;
}

void add_exact_values(SuiteBuilder& suite, double tol) {
    const double pi2 = kPi * kPi;
    suite.exact("s0.d3.sphere", expected_s0_d3(BetaParam(-1.0), tol).value, 1.0 / 8.0);
    suite.exact("s0.d3.ball", expected_s0_d3(BetaParam(0.0), tol).value, 401.0 / 2560.0);
    suite.exact("s0.d4.sphere", expected_s0_d4(BetaParam(-1.0), tol).value, 539.0 / (288.0 * pi2) - 1.0 / 6.0);
    suite.exact("s0.d4.ball", expected_s0_d4(BetaParam(0.0), tol).value,
                1692197.0 / (846720.0 * pi2) - 1.0 / 6.0);

    const AngleSumTable sphere3 = expected_angle_sum_table(3, BetaParam(-1.0), tol);
    const AngleSumTable ball3 = expected_angle_sum_table(3, BetaParam(0.0), tol);
    const AngleSumTable sphere4 = expected_angle_sum_table(4, BetaParam(-1.0), tol);
    const AngleSumTable ball4 = expected_angle_sum_table(4, BetaParam(0.0), tol);
    suite.exact("table.d3.sphere.s1", sphere3.s[1], 9.0 / 8.0);
    suite.exact("table.d3.sphere.s2", sphere3.s[2], 2.0);
    suite.exact("table.d3.ball.s1", ball3.s[1], 2961.0 / 2560.0);
    suite.exact("table.d3.ball.s2", ball3.s[2], 2.0);
    suite.exact("table.d4.sphere.s1", sphere4.s[1], 539.0 / (96.0 * pi2));
    suite.exact("table.d4.sphere.s2", sphere4.s[2], 5.0 / 3.0 + 539.0 / (144.0 * pi2));
    suite.exact("table.d4.ball.s1", ball4.s[1], 1692197.0 / (282240.0 * pi2));
    suite.exact("table.d4.ball.s2", ball4.s[2], 5.0 / 3.0 + 1692197.0 / (423360.0 * pi2));
}

void add_identities(SuiteBuilder& suite, double tol) {
    for (double beta : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}) {
        const BetaParam b(beta);
        const double f42 = expected_facets({4, 2, b.shifted(0.5)}, tol).value;
        const double f53 = expected_facets({5, 3, b.shifted(0.5)}, tol).value;
        suite.exact("identity.d3.beta=" + fmt_beta(beta), expected_s0_d3(b, tol).value, 2.0 - 0.5 * f42);
        suite.exact("identity.d4.beta=" + fmt_beta(beta), expected_s0_d4(b, tol).value, 1.5 - 0.25 * f53);
    }
}

void add_special_functions(SuiteBuilder& suite) {
    double worst_cdf = 0.0;
    for (double beta : {-0.5, 0.0, 0.5, 1.0, 2.5}) {
        for (int k = 0; k <= 20; ++k) {
            const double h = -1.0 + 0.1 * k;
            worst_cdf = std::max(worst_cdf, std::abs(beta_cdf_1d(beta, h) - beta_cdf_by_quadrature(beta, h)));
        }
    }
    suite.exact("special.beta_cdf_vs_quadrature", worst_cdf, 0.0, 1e-10);

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
    suite.exact("special.cos_power_closed_forms", worst_trig, 0.0, 1e-12);
}

std::vector<Simplex> random_tetrahedra(std::uint64_t seed) {
    Rng rng({seed, 0});
    std::vector<Simplex> out;
    while (static_cast<int>(out.size()) < kTetrahedra) {
        std::vector<Vec> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(sample_beta_point(3, BetaParam(0.0), rng));
        try {
            out.emplace_back(std::move(pts));
        } catch (const DegenerateError&) {
        }
    }
    return out;
}

void add_geometry(SuiteBuilder& suite, const VerifyOptions& options) {
    const Simplex orthant3({Vec::Zero(3), Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)});
    suite.exact("geometry.orthant.d3.exact", vertex_solid_angle_3d_exact(orthant3, 0), 0.125, 1e-15);
    if (options.quick) return;

    const Simplex orthant4({Vec::Zero(4), Vec::Unit(4, 0), Vec::Unit(4, 1), Vec::Unit(4, 2), Vec::Unit(4, 3)});
    Rng orthant_rng({suite.next_seed(), 0});
    suite.monte_carlo("geometry.orthant.d4.mc", vertex_solid_angle_mc(orthant4, 0, options.samples, orthant_rng),
                      1.0 / 16.0);

    const std::vector<Simplex> tetrahedra = random_tetrahedra(suite.next_seed());

    double worst = 0.0;
    Rng angle_rng({suite.next_seed(), 0});
    for (const Simplex& t : tetrahedra) {
        for (int i = 0; i < 4; ++i) {
            const MCEstimate mc = vertex_solid_angle_mc(t, i, kDirectionsPerTetrahedron, angle_rng);
            worst = std::max(worst, std::abs(mc.mean - vertex_solid_angle_3d_exact(t, i)) / mc.std_error);
        }
    }
    suite.max_z("geometry.exact_vs_mc.20_tetrahedra", worst);

    worst = 0.0;
    Rng projection_rng({suite.next_seed(), 0});
    for (const Simplex& t : tetrahedra) {
        double s0 = 0.0;
        for (int i = 0; i < 4; ++i) s0 += vertex_solid_angle_3d_exact(t, i);
        RunningStats stats;
        while (stats.count() < kDirectionsPerTetrahedron) {
            const Direction u = sample_unit_direction(3, projection_rng);
            try {
                stats.add(classify_projection(project_onto_complement(t.vertices(), u)).is_simplex() ? 1.0 : 0.0);
            } catch (const DegenerateError&) {
                stats.reject();
            }
        }
        worst = std::max(worst, std::abs(stats.mean() - 2.0 * s0) / stats.std_error());
    }
    suite.max_z("geometry.feldman_klain.20_tetrahedra", worst);
}

void add_monte_carlo(SuiteBuilder& suite, const VerifyOptions& options) {
    for (int d : {3, 4}) {
        for (double beta : {-1.0, 0.0, 1.0}) {
            const BetaParam b(beta);
            const double exact = expected_s0(d, b, options.tolerance).value;
            const std::string tag = ".d" + std::to_string(d) + ".beta=" + fmt_beta(beta);
            suite.monte_carlo("mc.s0_projection" + tag,
                              mc_projection_simplex_prob(d, b, options.samples, suite.mc()), exact, 0.5);
            suite.monte_carlo("mc.s0_direct" + tag,
                              mc_angle_sum_direct(d, b, options.samples, kVerifyDirsPerVertex, suite.mc()), exact);
        }
    }

    struct FacetCase {
        int n;
        int d;
        double beta;
    };
    for (const FacetCase& fc : {FacetCase{4, 2, -0.5}, FacetCase{6, 2, 0.0}, FacetCase{8, 2, 1.0},
                                FacetCase{5, 3, -0.5}, FacetCase{6, 3, 0.0}}) {
        const PolytopeSpec spec{fc.n, fc.d, BetaParam(fc.beta)};
        const std::string name = "mc.facets.n" + std::to_string(fc.n) + ".d" + std::to_string(fc.d) +
                                 ".beta=" + fmt_beta(fc.beta);
        suite.monte_carlo(name, mc_facet_count(spec, options.samples, suite.mc()),
                          expected_facets(spec, options.tolerance).value);
    }
}

}  // namespace

RunReport run_reference_suite(const VerifyOptions& options) {
    SuiteBuilder suite(options);
    add_exact_values(suite, options.tolerance);
    add_identities(suite, options.tolerance);
    add_special_functions(suite);
    add_geometry(suite, options);
    if (!options.quick) add_monte_carlo(suite, options);

    RunReport report = suite.take();
    report.seed = options.seed;
    return report;
}

}  // namespace betasimplex
