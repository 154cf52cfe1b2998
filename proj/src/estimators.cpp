#include "betasimplex/estimators.hpp"

#include <exception>
#include <vector>

#include <omp.h>

#include "betasimplex/errors.hpp"
#include "betasimplex/geometry.hpp"
#include "betasimplex/sampling.hpp"

namespace betasimplex {

namespace {

constexpr int kMaxFacetPoints = 32;

std::uint64_t chunk_size(std::uint64_t total, std::uint64_t chunks, std::uint64_t c) {
    return total / chunks + (c < total % chunks ? 1 : 0);
}

template <class Kernel>
MCEstimate run_chunked(std::uint64_t n_samples, const McOptions& options, Kernel&& kernel) {
    if (n_samples == 0) throw DomainError("Monte Carlo estimators need at least one sample");
    if (options.chunks == 0) throw DomainError("chunk count must be >= 1");
    if (options.workers < 0) throw DomainError("worker count must be >= 0");

    const auto chunks = static_cast<std::int64_t>(options.chunks);
    std::vector<RunningStats> partial(options.chunks);

    auto run_one = [&](std::int64_t c) {
        const auto index = static_cast<std::uint64_t>(c);
        Rng rng({options.seed, index});
        kernel(rng, chunk_size(n_samples, options.chunks, index), partial[static_cast<std::size_t>(c)]);
    };

    if (options.execution == Execution::Serial) {
        for (std::int64_t c = 0; c < chunks; ++c) run_one(c);
    } else {
        const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (std::int64_t c = 0; c < chunks; ++c) {
            try {
                run_one(c);
            } catch (...) {
#pragma omp critical(betasimplex_mc_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    RunningStats total;
    for (const RunningStats& p : partial) total.merge(p);
    return {total.mean(), total.std_error(), total.count(), {options.seed, options.chunks}, total.rejected()};
}

std::vector<Vec> sample_points(int count, int d, BetaParam beta, Rng& rng) {
    std::vector<Vec> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) points.push_back(sample_beta_point(d, beta, rng));
    return points;
}

void check_simplex_dim(int d) {
    if (d != 3 && d != 4) throw DomainError("angle-sum estimators support d = 3 and d = 4");
}

}  // namespace

MCEstimate mc_angle_sum_direct(int d, BetaParam beta, std::uint64_t n_simplices, std::uint64_t dirs_per_vertex,
                               const McOptions& options) {
    check_simplex_dim(d);
    if (d == 4 && dirs_per_vertex == 0) throw DomainError("d = 4 needs dirs_per_vertex >= 1");

    return run_chunked(n_simplices, options, [&](Rng& rng, std::uint64_t count, RunningStats& stats) {
        for (std::uint64_t k = 0; k < count;) {
            try {
                const Simplex simplex(sample_points(d + 1, d, beta, rng));
                double s0 = 0.0;
                for (int i = 0; i <= d; ++i) {
                    if (d == 3) {
                        s0 += vertex_solid_angle_3d_exact(simplex, i);
                    } else {
                        const TangentCone cone(simplex, i);
                        std::uint64_t hits = 0;
                        for (std::uint64_t j = 0; j < dirs_per_vertex; ++j)
                            hits += cone.contains(sample_unit_direction(d, rng)) ? 1 : 0;
                        s0 += static_cast<double>(hits) / static_cast<double>(dirs_per_vertex);
                    }
                }
                stats.add(s0);
                ++k;
            } catch (const DegenerateError&) {
                stats.reject();
            }
        }
    });
}

MCEstimate mc_projection_simplex_prob(int d, BetaParam beta, std::uint64_t n_samples, const McOptions& options) {
    check_simplex_dim(d);
    return run_chunked(n_samples, options, [&](Rng& rng, std::uint64_t count, RunningStats& stats) {
        for (std::uint64_t k = 0; k < count;) {
            try {
                const Simplex simplex(sample_points(d + 1, d, beta, rng));
                const Direction u = sample_unit_direction(d, rng);
                const std::vector<Vec> projected = project_onto_complement(simplex.vertices(), u);
                stats.add(classify_projection(projected).is_simplex() ? 1.0 : 0.0);
                ++k;
            } catch (const DegenerateError&) {
                stats.reject();
            }
        }
    });
}

MCEstimate mc_facet_count(const PolytopeSpec& spec, std::uint64_t n_samples, const McOptions& options) {
    spec.validate();
    if (spec.d != 2 && spec.d != 3) throw DomainError("facet Monte Carlo supports d = 2 and d = 3");
    if (spec.n > kMaxFacetPoints) throw DomainError("facet Monte Carlo supports at most 32 points");

    return run_chunked(n_samples, options, [&](Rng& rng, std::uint64_t count, RunningStats& stats) {
        for (std::uint64_t k = 0; k < count;) {
            try {
                const std::vector<Vec> points = sample_points(spec.n, spec.d, spec.beta, rng);
                stats.add(static_cast<double>(hull_facet_count(points, spec.d)));
                ++k;
            } catch (const DegenerateError&) {
                stats.reject();
            }
        }
    });
}

}  // namespace betasimplex
