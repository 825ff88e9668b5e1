#pragma once

#include <vector>

#include <Eigen/Dense>

#include "telecloning/circuits/spec.hpp"
#include "telecloning/sim/noise.hpp"

namespace telecloning::harness {

/// Reduced density operator of each clone, in clone order.
using CloneDensities = std::vector<Eigen::Matrix2cd>;

/// One Bell outcome: its probability and the corrected clones it leaves.
struct OutcomeClones {
    unsigned variant = 0;  // same packing as TelecloningSpec::variant
    double probability = 0.0;
    CloneDensities clones;
};

/**
 * Exact clone states for the spec's mode, averaged over Bell outcomes.
 * Post-selection weights each variant circuit's own outcome by its
 * probability. Ancillas are traced out. Depolarizing noise switches to
 * density-matrix evolution.
 */
CloneDensities exact_clone_densities(const circuits::TelecloningSpec& spec, const circuits::MessageSpec& msg,
                                     const sim::NoiseModel& noise = {});

/// Per-outcome clone states: the feed-forward branches, or for post-selection
/// the kept branch of each variant circuit.
std::vector<OutcomeClones> exact_outcome_clones(const circuits::TelecloningSpec& spec,
                                                const circuits::MessageSpec& msg, const sim::NoiseModel& noise = {});

}  // namespace telecloning::harness
