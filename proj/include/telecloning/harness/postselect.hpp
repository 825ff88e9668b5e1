#pragma once

#include <cstdint>
#include <vector>

#include "telecloning/harness/config.hpp"

namespace telecloning::harness {

struct PostselectRecord {
    double theta_y = 0.0;
    double theta_z = 0.0;
    unsigned variant = 0;
    double kept_proportion = 0.0;
    std::vector<double> clone_fidelities;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/**
 * Kept proportion and per-clone fidelity of each post-selection variant,
 * for 2-clone circuits, at theta_z = config.grid.fixed_theta_z (pi/2 if
 * unset) over grid.n_theta_y values of theta_y. Rows are theta_y-major,
 * variant-minor.
 *
 * Sampled mode draws each shot's Bell outcome once and runs it through the
 * matching variant circuit, so the four proportions at a point come from one
 * pool of 3 * shots (X, Y, Z circuits) and sum to exactly 1. A variant with
 * no kept shots in some basis reports fidelity NaN.
 */
std::vector<PostselectRecord> postselect_analysis(const ExperimentConfig& config);

}  // namespace telecloning::harness
