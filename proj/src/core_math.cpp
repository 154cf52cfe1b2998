#include "betasimplex/core_math.hpp"

#include <cmath>
#include <numbers>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "betasimplex/errors.hpp"

namespace betasimplex {

namespace {

constexpr double kPi = std::numbers::pi;

// Above this the recursion is still exact but costs more than the beta route.
constexpr double kMaxRecursionOrder = 400.0;

bool is_finite(double x) { return std::isfinite(x); }

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod_21(const std::function<double(double)>& f, double a, double b) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using Gauss = boost::math::quadrature::gauss<double, 10>;
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();

    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    double kronrod = fc * wk[0];
    double gauss = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double dx = half * x[i];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += pair * wk[i];
        // The 10-point Gauss nodes sit at the odd Kronrod indices.
        if (i % 2 == 1) gauss += pair * wg[i / 2];
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

double log_gamma(double x) {
    if (!is_finite(x) || x <= 0.0) throw DomainError("log_gamma: argument must be finite and > 0");
    return boost::math::lgamma(x);
}

double log_c(int d, double beta) {
    if (d < 1) throw DomainError("log_c: dimension must be >= 1");
    if (!is_finite(beta) || beta <= -1.0) throw DomainError("log_c: beta must be finite and > -1");
    const double half_d = 0.5 * d;
    return log_gamma(half_d + beta + 1.0) - half_d * std::log(kPi) - log_gamma(beta + 1.0);
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!is_finite(a) || !is_finite(b) || a <= 0.0 || b <= 0.0)
        throw DomainError("regularized_incomplete_beta: a and b must be finite and > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("regularized_incomplete_beta: x must lie in [0, 1]");
    return boost::math::ibeta(a, b, x);
}

double beta_cdf_1d(double beta, double h) {
    if (!is_finite(beta) || beta <= -1.0) throw DomainError("beta_cdf_1d: beta must be finite and > -1");
    if (!(h >= -1.0 && h <= 1.0)) throw DomainError("beta_cdf_1d: h must lie in [-1, 1]");
    if (h == -1.0) return 0.0;
    if (h == 1.0) return 1.0;
    // Evaluate the upper tail for positive h so that F(h) + F(-h) = 1 holds to rounding.
    if (h > 0.0) return 1.0 - regularized_incomplete_beta(beta + 1.0, beta + 1.0, 0.5 * (1.0 - h));
    return regularized_incomplete_beta(beta + 1.0, beta + 1.0, 0.5 * (1.0 + h));
}

double cos_power_integral(double m, double phi) {
    if (!is_finite(m) || m < 0.0) throw DomainError("cos_power_integral: m must be finite and >= 0");
    if (!(phi >= -0.5 * kPi && phi <= 0.5 * kPi))
        throw DomainError("cos_power_integral: phi must lie in [-pi/2, pi/2]");

    if (m == std::floor(m) && m <= kMaxRecursionOrder) {
        const auto order = static_cast<int>(m);
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        double even = phi + 0.5 * kPi;  // J_0
        double odd = 1.0 + s;           // J_1
        if (order == 0) return even;
        if (order == 1) return odd;
        // Walk J_k for k of the same parity as m; cpow tracks cos^{k-1}.
        double value = (order % 2 == 0) ? even : odd;
        double cpow = (order % 2 == 0) ? c : c * c;
        for (int k = (order % 2 == 0) ? 2 : 3; k <= order; k += 2) {
            value = cpow * s / k + (static_cast<double>(k - 1) / k) * value;
            cpow *= c * c;
        }
        return value;
    }

    const double beta = 0.5 * (m - 1.0);
    return beta_cdf_1d(beta, std::sin(phi)) * std::exp(-log_c(1, beta));
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_intervals) {
    if (!is_finite(a) || !is_finite(b) || !(a < b))
        throw DomainError("integrate_adaptive: need finite a < b");
    if (!is_finite(abs_tol) || abs_tol <= 0.0)
        throw DomainError("integrate_adaptive: abs_tol must be finite and > 0");
    if (max_intervals == 0) throw DomainError("integrate_adaptive: max_intervals must be >= 1");

    constexpr std::size_t kEvalsPerRule = 21;

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod_21(f, a, b);
    std::size_t evaluations = kEvalsPerRule;
    if (!is_finite(first.value)) throw DomainError("integrate_adaptive: integrand is not finite");
    heap.push(first);
    double total = first.value;
    double error = first.error;

    while (error > abs_tol) {
        if (heap.size() >= max_intervals) {
            throw QuadratureError("integrate_adaptive: subdivision budget exhausted",
                                  {total, error, evaluations});
        }
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            throw QuadratureError("integrate_adaptive: interval collapsed below machine resolution",
                                  {total, error, evaluations});
        }
        heap.pop();
        const Segment left = gauss_kronrod_21(f, worst.a, mid);
        const Segment right = gauss_kronrod_21(f, mid, worst.b);
        evaluations += 2 * kEvalsPerRule;
        if (!is_finite(left.value) || !is_finite(right.value))
            throw DomainError("integrate_adaptive: integrand is not finite");
        heap.push(left);
        heap.push(right);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        if (error <= abs_tol) {
            // Confirm with a fresh sum so cancellation in the running error cannot end the loop early.
            error = 0.0;
            total = 0.0;
            auto copy = heap;
            while (!copy.empty()) {
                error += copy.top().error;
                total += copy.top().value;
                copy.pop();
            }
        }
    }
    return {total, error, evaluations};
}

}  // namespace betasimplex
