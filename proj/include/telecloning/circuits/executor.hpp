#pragma once

#include <cstdint>
#include <vector>

#include "telecloning/circuits/circuit.hpp"
#include "telecloning/sim/measure.hpp"
#include "telecloning/sim/noise.hpp"
#include "telecloning/sim/rng.hpp"
#include "telecloning/sim/state.hpp"

namespace telecloning::circuits {

/// One classical history of a run: the recorded register and the state it leaves.
template <class State>
struct RegisterBranch {
    double probability = 0.0;
    std::uint64_t clbits = 0;  // bit c = recorded value of clbit c
    State state;               // normalized
};

/**
 * Runs `circuit` from |0...0> and enumerates every measurement history.
 *
 * Readout noise is folded into measurements: a branch forks on the true
 * outcome and again on the recorded bit, so conditionals see the noisy bit the
 * way hardware would. The pure variant rejects depolarizing noise; the mixed
 * variant applies it after every gate and merges histories with equal
 * registers.
 */
std::vector<RegisterBranch<sim::PureState>> run_branches_pure(const Circuit& circuit,
                                                              const sim::NoiseModel& noise = {});
std::vector<RegisterBranch<sim::MixedState>> run_branches_mixed(const Circuit& circuit,
                                                                const sim::NoiseModel& noise = {});

/// Exact distribution over the full classical register (2^n_clbits entries).
std::vector<double> outcome_distribution(const Circuit& circuit, const sim::NoiseModel& noise = {});

/// `shots` independent draws from outcome_distribution.
sim::Histogram sample_circuit(const Circuit& circuit, std::uint64_t shots, const sim::NoiseModel& noise,
                              sim::RngStream& rng);

/// A single shot simulated op by op with sampled measurements. Slow; kept for
/// cross-checking sample_circuit.
std::uint64_t run_trajectory(const Circuit& circuit, const sim::NoiseModel& noise, sim::RngStream& rng);

}  // namespace telecloning::circuits
