#pragma once

#include <cstdint>

#include "betasimplex/core_math.hpp"
#include "betasimplex/estimators.hpp"
#include "betasimplex/report.hpp"

namespace betasimplex {

/// Directions per vertex used by the nested d = 4 angle-sum estimator in the
/// verification suite.
inline constexpr std::uint64_t kVerifyDirsPerVertex = 16;

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    int workers = 0;
    /// Quadrature-only checks (no Monte Carlo).
    bool quick = false;
    std::uint64_t samples = 1'000'000;
    double tolerance = kDefaultTolerance;
};

/// Checks the reference constants and identities: closed-form values, derived
/// angle-sum tables, the facet identities, special-function accuracy and,
/// unless quick, Monte Carlo agreement at 4 standard errors. Every Monte Carlo
/// check draws from its own stream derived from the seed, so the report is a
/// deterministic function of the options (worker count excluded).
RunReport run_reference_suite(const VerifyOptions& options);

}  // namespace betasimplex
