#pragma once

#include <cmath>
#include <cstdint>

#include "betasimplex/sampling.hpp"

namespace betasimplex {

/// Monte Carlo estimate with its standard error.
struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    /// Run seed; stream is the number of chunks the run was split into.
    RngState seed;
    /// Samples discarded as numerically degenerate and redrawn.
    std::uint64_t rejected = 0;

    /// |mean - target| within k standard errors.
    bool agrees_with(double target, double k = 4.0) const {
        return std::abs(mean - target) <= k * std_error;
    }
};

/// Welford accumulator; merge() pools two accumulators exactly (Chan et al.).
class RunningStats {
public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    void merge(const RunningStats& other) {
        if (other.count_ == 0) return;
        if (count_ == 0) {
            *this = other;
            return;
        }
        const double n1 = static_cast<double>(count_);
        const double n2 = static_cast<double>(other.count_);
        const double delta = other.mean_ - mean_;
        const double n = n1 + n2;
        mean_ += delta * n2 / n;
        m2_ += other.m2_ + delta * delta * n1 * n2 / n;
        count_ += other.count_;
        rejected_ += other.rejected_;
    }

    void reject() { ++rejected_; }

    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t rejected() const noexcept { return rejected_; }
    double mean() const noexcept { return mean_; }
    double variance() const noexcept {
        return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
    }
    double std_error() const noexcept {
        return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
    }

private:
    std::uint64_t count_ = 0;
    std::uint64_t rejected_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace betasimplex
