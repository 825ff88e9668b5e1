#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "telecloning/sim/noise.hpp"
#include "telecloning/sim/rng.hpp"
#include "telecloning/sim/state.hpp"

namespace telecloning::sim {

// Outcomes over a qubit list are packed little-endian: bit j is the result for qubits[j].

template <class State>
struct Branch {
    double probability = 0.0;
    std::uint64_t outcome = 0;
    State state;  // renormalized post-measurement state
};

/// Born-rule distribution over the 2^k outcomes of `qubits`.
std::vector<double> outcome_probabilities(const PureState& state, const std::vector<std::size_t>& qubits);
std::vector<double> outcome_probabilities(const MixedState& state, const std::vector<std::size_t>& qubits);

/// One branch per outcome with nonzero probability, in increasing outcome order.
std::vector<Branch<PureState>> exact_measure_branches(const PureState& state, const std::vector<std::size_t>& qubits);
std::vector<Branch<MixedState>> exact_measure_branches(const MixedState& state, const std::vector<std::size_t>& qubits);

/// Draws an outcome, collapses `state` onto it and renormalizes.
std::uint64_t sample_measure(PureState& state, const std::vector<std::size_t>& qubits, RngStream& rng);
std::uint64_t sample_measure(MixedState& state, const std::vector<std::size_t>& qubits, RngStream& rng);

/// Unnormalized projection onto `outcome`; returns the outcome probability
/// relative to the state's current norm.
double project(PureState& state, const std::vector<std::size_t>& qubits, std::uint64_t outcome);
double project(MixedState& state, const std::vector<std::size_t>& qubits, std::uint64_t outcome);

struct Histogram {
    std::size_t n_bits = 0;
    std::vector<std::uint64_t> counts;  // indexed by packed outcome

    explicit Histogram(std::size_t bits = 0) : n_bits(bits), counts(std::size_t{1} << bits, 0) {}
    std::uint64_t total() const;
    /// Count for a little-endian bitstring ("01" = bit 1 set).
    std::uint64_t at(const std::string& bits) const;
};

/// Pushes an ideal outcome distribution through per-bit confusion matrices;
/// qubits[j] picks the matrix for bit j.
std::vector<double> apply_readout(const std::vector<double>& probabilities, const std::vector<std::size_t>& qubits,
                                  const NoiseModel& noise);

/// Shot sampling with readout confusion applied independently per bit per shot.
Histogram sample_counts(const PureState& state, const std::vector<std::size_t>& qubits, std::uint64_t shots,
                        const NoiseModel& noise, RngStream& rng);
Histogram sample_counts(const MixedState& state, const std::vector<std::size_t>& qubits, std::uint64_t shots,
                        const NoiseModel& noise, RngStream& rng);

}  // namespace telecloning::sim
