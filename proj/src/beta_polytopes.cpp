#include "betasimplex/beta_polytopes.hpp"

#include <cmath>
#include <numbers>

#include "betasimplex/errors.hpp"

namespace betasimplex {

void PolytopeSpec::validate() const {
    if (d < 2) throw DomainError("polytope dimension must be >= 2");
    if (n < d + 1) throw DomainError("polytope needs at least d + 1 points");
}

double log_facet_constant(const PolytopeSpec& spec) {
    spec.validate();
    const double n = spec.n;
    const double d = spec.d;
    const double a = 0.5 * d * (2.0 * spec.beta.value() + d);

    const double log_binom = log_gamma(n + 1.0) - log_gamma(d + 1.0) - log_gamma(n - d + 1.0);
    double log_product = 0.0;
    for (int i = 1; i < spec.d; ++i) log_product += log_gamma(0.5 * (i + 1)) - log_gamma(0.5 * i);

    return log_binom + std::log(2.0) - log_gamma(0.5 * d) + log_gamma(a + 1.0) - log_gamma(a + 0.5) +
           log_product;
}

QuadratureResult expected_facets(const PolytopeSpec& spec, double abs_tol) {
    spec.validate();
    if (!std::isfinite(abs_tol) || abs_tol <= 0.0) throw DomainError("abs_tol must be finite and > 0");

    const double d = spec.d;
    const double beta = spec.beta.value();
    const double exponent = d * beta + 0.5 * (d * d - 1.0);
    const double cdf_beta = beta + 0.5 * (d - 1.0);
    const double remaining = spec.n - spec.d;
    const double prefactor = std::exp(log_facet_constant(spec));

    // (1 - h^2)^e dh = cos(phi)^{2e + 1} dphi
    auto integrand = [=](double phi) {
        const double h = std::sin(phi);
        const double cdf = beta_cdf_1d(cdf_beta, h);
        if (cdf <= 0.0) return 0.0;
        return std::pow(std::cos(phi), 2.0 * exponent + 1.0) * std::exp(remaining * std::log(cdf));
    };
    const double half_pi = 0.5 * std::numbers::pi;
    const QuadratureResult integral = integrate_adaptive(integrand, -half_pi, half_pi, abs_tol / prefactor);
    return {prefactor * integral.value, prefactor * integral.abs_error_estimate, integral.evaluations};
}

}  // namespace betasimplex
