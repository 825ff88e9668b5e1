#pragma once

#include <cstddef>
#include <vector>

#include "telecloning/circuits/circuit.hpp"
#include "telecloning/circuits/spec.hpp"
#include "telecloning/sim/state.hpp"

namespace telecloning::circuits {

/// RY angle gamma(x, y) = 2 acos(sqrt(x / y)), so RY(gamma)|0> has weight x/y on |0>.
double ry_angle(int x, int y);

/// Uniform superposition of the weight-i strings on M qubits.
sim::PureState dicke_state(int m, int i);

/**
 * Gates of the Dicke unitary U_n on `qubits`: |1^i 0^(n-i)> -> D(n, i), where
 * qubits[0] carries the first 1 of the unary input.
 *
 * Split-and-cyclic-shift construction. Each shift step SCS_n is a 2-CNOT
 * block on its last two positions followed by 5-CNOT blocks for the longer
 * shifts; both blocks are only correct on the inputs the recursion can
 * produce, which is what lets them beat the generic controlled-RY
 * decompositions. Total (5n^2 - 11n + 6) / 2 CNOTs.
 */
std::vector<GateOp> dicke_gates(const std::vector<std::size_t>& qubits);

/// Segment on qubits 0..M-1; on LNN the three-qubit blocks get routing swaps.
Circuit build_dicke_unitary(int m, Connectivity connectivity);

}  // namespace telecloning::circuits
