#pragma once

#include <vector>

#include "betasimplex/core_math.hpp"

namespace betasimplex {

/// Parameter of the beta family of distributions on the unit ball.
/// beta = -1 denotes the weak limit, the uniform distribution on the sphere.
class BetaParam {
public:
    explicit BetaParam(double beta);

    double value() const noexcept { return beta_; }
    bool is_sphere() const noexcept { return beta_ == -1.0; }

    BetaParam shifted(double delta) const { return BetaParam(beta_ + delta); }

    friend bool operator==(const BetaParam&, const BetaParam&) = default;

private:
    double beta_;
};

/// Expected angle-sums s_0 ... s_{d-1} of the d-dimensional beta simplex.
/// Angles are fractions of the full solid angle.
struct AngleSumTable {
    int d = 0;
    BetaParam beta{0.0};
    std::vector<double> s;
    /// Quadrature error carried over from s_0 (the other sums are affine in it).
    double abs_error_estimate = 0.0;
};

/// E s_0 of the beta tetrahedron (d = 3).
QuadratureResult expected_s0_d3(BetaParam beta, double abs_tol = kDefaultTolerance);

/// E s_0 of the four-dimensional beta simplex.
QuadratureResult expected_s0_d4(BetaParam beta, double abs_tol = kDefaultTolerance);

/// Dispatches to expected_s0_d3 / expected_s0_d4; d must be 3 or 4.
QuadratureResult expected_s0(int d, BetaParam beta, double abs_tol = kDefaultTolerance);

/// Completes s_0 to the full table using the Gram-Euler relation (d = 3, 4)
/// and the Dehn-Sommerville relation (d = 4).
AngleSumTable expected_angle_sum_table(int d, BetaParam beta, double abs_tol = kDefaultTolerance);

/// The table implied by a given s_0, without any quadrature.
std::vector<double> angle_sums_from_s0(int d, double s0);

}  // namespace betasimplex
