#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace betasimplex {

/// Absolute tolerance used for every quadrature-backed quantity unless the
/// caller overrides it.
inline constexpr double kDefaultTolerance = 1e-11;

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Adaptive integration ran out of subdivisions before meeting its tolerance.
/// The best estimate reached so far is kept for diagnostics.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_(best) {}

    const QuadratureResult& best_estimate() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Log of the normalising constant of the d-dimensional beta density
/// c = Gamma(d/2 + beta + 1) / (pi^{d/2} Gamma(beta + 1)). Requires beta > -1.
double log_c(int d, double beta);

/// Regularised incomplete beta function I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of the one-dimensional beta law with density proportional to
/// (1 - x^2)^beta on [-1, 1], evaluated at h. Computed as
/// I_{(1+h)/2}(beta + 1, beta + 1).
double beta_cdf_1d(double beta, double h);

/// Integral of cos(t)^m over [-pi/2, phi].
///
/// Integer m (up to a few hundred) uses the power-reduction recursion
/// starting from J_0 = phi + pi/2 and J_1 = 1 + sin(phi). Other m are mapped
/// through x = sin(t) onto the one-dimensional beta CDF with parameter
/// (m - 1) / 2.
double cos_power_integral(double m, double phi);

/// Globally adaptive 21-point Gauss-Kronrod quadrature on [a, b].
///
/// Intervals are bisected in order of decreasing error estimate (|K21 - G10|)
/// until the summed estimate drops to abs_tol. Throws QuadratureError with the
/// best estimate when max_intervals is exhausted. The rule never evaluates f at
/// the endpoints, so integrable endpoint singularities are tolerated.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = kDefaultTolerance,
                                    std::size_t max_intervals = 5000);

}  // namespace betasimplex
