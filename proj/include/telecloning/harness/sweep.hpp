#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "telecloning/harness/config.hpp"
#include "telecloning/sim/measure.hpp"
#include "telecloning/sim/rng.hpp"
#include "telecloning/tomo/mitigation.hpp"
#include "telecloning/tomo/tomography.hpp"

namespace telecloning::harness {

struct SweepRecord {
    std::string circuit;
    circuits::Mode mode = circuits::Mode::FeedForward;
    circuits::Connectivity connectivity = circuits::Connectivity::Full;
    double theta_y = 0.0;
    double theta_z = 0.0;
    std::size_t clone = 0;
    std::uint64_t shots = 0;
    bool mitigated = false;
    double fidelity = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const SweepRecord&) const = default;
};

/**
 * One record per (grid point, clone), theta_y-major, then theta_z, then clone.
 *
 * Exact mode (shots = 0) reads the clone states off the simulator. Sampled
 * mode runs the X, Y and Z tomography circuits with `shots` each (per variant
 * circuit in post-selection mode, keeping only matching shots), optionally
 * mitigates, and fits each clone by MLE. Grid point k draws from the stream
 * (seed, k), so results do not depend on `threads`.
 */
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config);

/// 2^m preparation circuits over `qubits` (of an n-qubit device), sampled
/// with the config's readout and gate noise, turned into a calibration.
tomo::CalibrationMatrix calibrate(std::size_t n_qubits, const std::vector<std::size_t>& qubits,
                                  std::uint64_t shots, const sim::NoiseModel& noise, sim::RngStream& rng);

/// Runs fn(0..n-1) on up to `threads` workers; fn must only touch its own slot.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace telecloning::harness
