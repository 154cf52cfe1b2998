#include "betasimplex/angle_sums.hpp"

#include <cmath>
#include <numbers>

#include "betasimplex/errors.hpp"

namespace betasimplex {

namespace {

constexpr double kPi = std::numbers::pi;

// Leading factor of the d = 3 constant. The mutation build perturbs it so that
// the test suite can be shown to catch a wrong constant.
#ifdef BETASIMPLEX_MUTATION_TEST
constexpr double kK3Factor = 6.001;
#else
constexpr double kK3Factor = 6.0;
#endif

// E s_0 = offset - K * int_{-pi/2}^{pi/2} cos^{outer} J_{inner}(phi)^2 dphi,
// with ln K supplied by the caller.
QuadratureResult trig_angle_sum(double offset, double log_prefactor, double outer_power,
                                double inner_power, double abs_tol) {
    if (!std::isfinite(abs_tol) || abs_tol <= 0.0) throw DomainError("abs_tol must be finite and > 0");
    const double prefactor = std::exp(log_prefactor);
    auto integrand = [=](double phi) {
        const double inner = cos_power_integral(inner_power, phi);
        return std::pow(std::cos(phi), outer_power) * inner * inner;
    };
    const QuadratureResult integral =
        integrate_adaptive(integrand, -0.5 * kPi, 0.5 * kPi, abs_tol / prefactor);
    return {offset - prefactor * integral.value, prefactor * integral.abs_error_estimate,
            integral.evaluations};
}

}  // namespace

BetaParam::BetaParam(double beta) : beta_(beta) {
    if (!std::isfinite(beta) || beta < -1.0) throw DomainError("beta must be finite and >= -1");
}

QuadratureResult expected_s0_d3(BetaParam beta, double abs_tol) {
    const double b = beta.value();
    const double log_k = std::log(kK3Factor) + 2.0 * log_gamma(b + 2.5) + log_gamma(2.0 * b + 4.0) -
                         1.5 * std::log(kPi) - 2.0 * log_gamma(b + 2.0) - log_gamma(2.0 * b + 3.5);
    return trig_angle_sum(2.0, log_k, 4.0 * b + 6.0, 2.0 * b + 3.0, abs_tol);
}

QuadratureResult expected_s0_d4(BetaParam beta, double abs_tol) {
    const double b = beta.value();
    const double log_k = std::log(5.0) + 2.0 * log_gamma(b + 3.0) + log_gamma(3.0 * b + 7.0) -
                         1.5 * std::log(kPi) - 2.0 * log_gamma(b + 2.5) - log_gamma(3.0 * b + 6.5);
    return trig_angle_sum(1.5, log_k, 6.0 * b + 12.0, 2.0 * b + 4.0, abs_tol);
}

QuadratureResult expected_s0(int d, BetaParam beta, double abs_tol) {
    switch (d) {
        case 3: return expected_s0_d3(beta, abs_tol);
        case 4: return expected_s0_d4(beta, abs_tol);
        default: throw DomainError("expected angle-sums are available for d = 3 and d = 4 only");
    }
}

std::vector<double> angle_sums_from_s0(int d, double s0) {
    switch (d) {
        // s0 - s1 + s2 = 1, s2 = 2
        case 3: return {s0, s0 + 1.0, 2.0};
        // s0 - s1 + s2 - s3 = -1, -2 s1 + 3 s2 - 6 s3 = -10, s3 = 5/2
        case 4: return {s0, 3.0 * s0 + 0.5, 2.0 * s0 + 2.0, 2.5};
        default: throw DomainError("angle-sum tables are available for d = 3 and d = 4 only");
    }
}

AngleSumTable expected_angle_sum_table(int d, BetaParam beta, double abs_tol) {
    const QuadratureResult s0 = expected_s0(d, beta, abs_tol);
    AngleSumTable table{d, beta, angle_sums_from_s0(d, s0.value), s0.abs_error_estimate};
    if (d == 4) table.abs_error_estimate *= 3.0;  // s1 = 3 s0 + 1/2 carries the largest factor
    return table;
}

}  // namespace betasimplex
