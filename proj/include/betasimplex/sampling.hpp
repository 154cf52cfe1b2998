#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "betasimplex/angle_sums.hpp"

namespace betasimplex {

inline constexpr int kMaxDim = 4;

/// Column vector of runtime dimension 1..kMaxDim with inline storage.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

/// Identifies a reproducible random stream: a run seed plus the index of the
/// chunk (or worker) that owns the stream.
struct RngState {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    friend bool operator==(const RngState&, const RngState&) = default;
};

class Rng {
public:
    explicit Rng(RngState state);

    double uniform() { return uniform_(engine_); }
    double normal() { return normal_(engine_); }
    double gamma(double shape);

    const RngState& state() const noexcept { return state_; }
    std::mt19937_64& engine() noexcept { return engine_; }

private:
    RngState state_;
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Unit vector in R^d, |u| = 1 to rounding.
class Direction {
public:
    /// Normalises v; throws DomainError for zero or non-finite input.
    explicit Direction(const Vec& v);

    const Vec& vec() const noexcept { return u_; }
    int dim() const noexcept { return static_cast<int>(u_.size()); }
    Direction operator-() const;

private:
    struct Normalised {};
    Direction(const Vec& v, Normalised) : u_(v) {}
    Vec u_;
};

Direction sample_unit_direction(int d, Rng& rng);

/// Beta(a, b) variate as g_a / (g_a + g_b) from two gamma variates.
double sample_beta_variate(double a, double b, Rng& rng);

/// Point with density proportional to (1 - |x|^2)^beta on the unit ball of R^d;
/// uniform on the sphere when beta = -1.
Vec sample_beta_point(int d, BetaParam beta, Rng& rng);

}  // namespace betasimplex
