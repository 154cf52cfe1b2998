#include "betasimplex/sampling.hpp"

#include <cmath>

#include "betasimplex/errors.hpp"

namespace betasimplex {

namespace {

std::seed_seq make_seed_seq(const RngState& state) {
    const auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); };
    const auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
    return std::seed_seq{lo(state.seed), hi(state.seed), lo(state.stream), hi(state.stream)};
}

void check_dim(int d) {
    if (d < 1 || d > kMaxDim) throw DomainError("dimension must lie in [1, 4]");
}

}  // namespace

Rng::Rng(RngState state) : state_(state) {
    auto seq = make_seed_seq(state);
    engine_.seed(seq);
}

double Rng::gamma(double shape) {
    std::gamma_distribution<double> dist(shape, 1.0);
    return dist(engine_);
}

Direction::Direction(const Vec& v) {
    if (v.size() < 1 || !v.allFinite()) throw DomainError("direction must be a finite non-empty vector");
    const double norm = v.norm();
    if (!(norm > 0.0)) throw DomainError("direction must be non-zero");
    u_ = v / norm;
}

Direction Direction::operator-() const { return Direction(-u_, Normalised{}); }

Direction sample_unit_direction(int d, Rng& rng) {
    check_dim(d);
    Vec v(d);
    for (;;) {
        for (int i = 0; i < d; ++i) v[i] = rng.normal();
        const double norm = v.norm();
        if (norm > 1e-100 && std::isfinite(norm)) return Direction(v);
    }
}

double sample_beta_variate(double a, double b, Rng& rng) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0)
        throw DomainError("beta variate needs finite a, b > 0");
    for (;;) {
        const double ga = rng.gamma(a);
        const double gb = rng.gamma(b);
        const double sum = ga + gb;
        if (sum > 0.0 && std::isfinite(sum)) {
            const double x = ga / sum;
            if (x > 0.0 && x < 1.0) return x;
        }
    }
}

Vec sample_beta_point(int d, BetaParam beta, Rng& rng) {
    check_dim(d);
    const Direction omega = sample_unit_direction(d, rng);
    if (beta.is_sphere()) return omega.vec();
    const double radius = std::sqrt(sample_beta_variate(0.5 * d, beta.value() + 1.0, rng));
    return radius * omega.vec();
}

}  // namespace betasimplex
