#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace telecloning::sim {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for task `task_index` of a run; a pure function of its inputs.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t task_index) noexcept;

/**
 * Random stream owned by one task. Streams for different task indices are
 * independent of the order in which tasks run, which is what makes parallel
 * sweeps reproducible.
 *
 * Doubles are built from the raw 64-bit output rather than through
 * std::uniform_real_distribution so that sequences match across standard
 * libraries.
 */
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t task_index);

    std::uint64_t next_u64() { return engine_(); }
    double uniform();  // [0, 1)
    bool bernoulli(double p) { return uniform() < p; }
    /// Index drawn from an unnormalized weight vector via its cumulative sums.
    std::size_t categorical(const std::vector<double>& cumulative);

private:
    std::mt19937_64 engine_;
};

/// Cumulative sums of `weights`, suitable for RngStream::categorical.
std::vector<double> cumulative(const std::vector<double>& weights);

}  // namespace telecloning::sim
