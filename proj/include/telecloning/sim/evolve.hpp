#pragma once

#include <cstddef>
#include <vector>

#include "telecloning/sim/gate.hpp"
#include "telecloning/sim/state.hpp"

namespace telecloning::sim {

// In-place evolution. Both throw std::out_of_range if the gate touches a qubit
// the state does not have.
void apply_gate(PureState& state, const GateOp& op);
void apply_gate(MixedState& state, const GateOp& op);

/// rho -> (1-p) rho + p (I/2^k (x) Tr_S rho) for the qubit set S, |S| = k.
void apply_depolarizing(MixedState& state, const std::vector<std::size_t>& qubits, double p);

/// Reduced state on `keep`; keep[j] becomes qubit j of the result.
MixedState partial_trace(const MixedState& state, const std::vector<std::size_t>& keep);
MixedState partial_trace(const PureState& state, const std::vector<std::size_t>& keep);

/// Same reduction without the trace-1 requirement, for unnormalized branch states.
DensityMatrix reduce(const MixedState& state, const std::vector<std::size_t>& keep);
DensityMatrix reduce(const PureState& state, const std::vector<std::size_t>& keep);

}  // namespace telecloning::sim
