#pragma once

#include "betasimplex/angle_sums.hpp"
#include "betasimplex/core_math.hpp"

namespace betasimplex {

/// Convex hull of n i.i.d. points drawn from the d-dimensional beta law.
struct PolytopeSpec {
    int n = 0;
    int d = 0;
    BetaParam beta{0.0};

    /// Throws DomainError unless d >= 2 and n >= d + 1.
    void validate() const;
};

/// Log of the constant in front of the facet integral:
/// binom(n, d) * 2 / Gamma(d/2) * Gamma(A + 1) / Gamma(A + 1/2) * prod_{i<d} Gamma((i+1)/2) / Gamma(i/2)
/// with A = d (2 beta + d) / 2.
double log_facet_constant(const PolytopeSpec& spec);

/// Expected number of facets of the beta polytope.
///
/// The h-integral over [-1, 1] is evaluated after the substitution h = sin(phi),
/// which keeps the integrand bounded for every beta >= -1.
QuadratureResult expected_facets(const PolytopeSpec& spec, double abs_tol = kDefaultTolerance);

}  // namespace betasimplex
