#pragma once

#include <cstdint>

#include "betasimplex/angle_sums.hpp"
#include "betasimplex/beta_polytopes.hpp"
#include "betasimplex/estimate.hpp"

namespace betasimplex {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::uint32_t kDefaultChunks = 64;

enum class Execution {
    Serial,    ///< reference path: chunks processed in order on the calling thread
    Parallel,  ///< chunks distributed over OpenMP threads
};

/// Estimators split the samples into a fixed number of chunks; chunk c draws
/// from the stream RngState{seed, c} and chunk results are merged in index
/// order. The result therefore depends on (seed, chunks) only, never on the
/// number of workers or the execution policy.
struct McOptions {
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t chunks = kDefaultChunks;
    /// 0 selects the OpenMP default.
    int workers = 0;
    Execution execution = Execution::Parallel;
};

/// Mean vertex angle-sum s_0 over sampled beta simplices. Exact solid angles
/// for d = 3; for d = 4 each vertex angle is itself estimated from
/// dirs_per_vertex uniform directions (dirs_per_vertex is ignored for d = 3).
MCEstimate mc_angle_sum_direct(int d, BetaParam beta, std::uint64_t n_simplices,
                               std::uint64_t dirs_per_vertex, const McOptions& options = {});

/// Probability that the projection of a beta simplex along an independent
/// uniform direction is a (d - 1)-simplex. Twice the expected angle-sum.
MCEstimate mc_projection_simplex_prob(int d, BetaParam beta, std::uint64_t n_samples,
                                      const McOptions& options = {});

/// Mean number of hull facets of n beta points, d in {2, 3}, n <= 32.
MCEstimate mc_facet_count(const PolytopeSpec& spec, std::uint64_t n_samples, const McOptions& options = {});

}  // namespace betasimplex
