#pragma once

#include "telecloning/circuits/circuit.hpp"
#include "telecloning/circuits/spec.hpp"

namespace telecloning::circuits {

/**
 * Telecloning state on the port block, as a clbit-free segment.
 *
 * Local qubit order matches the line: ancillas 0..M-2, port M-1, clones
 * M..2M-1 with ancilla; port 0, clones 1..M without. From |0...0> this
 * prepares
 *   with ancilla:  (1/sqrt(M+1)) sum_i D(M,i) (x) D(M,i)
 *   M = 2:         sqrt(2/3)|0>D(2,0) + sqrt(1/3)|1>D(2,1)
 *   M = 3:         sqrt(1/2)|0>D(3,0) + sqrt(1/6)(|0>D(3,1) + |1>D(3,1) + |1>D(3,2))
 * with the port (or the ancilla block) written first.
 */
Circuit build_telecloning_state(int m, bool with_ancilla, Connectivity connectivity);

/**
 * Complete experiment circuit: message prep, telecloning state, Bell
 * measurement, mode-dependent corrections, then basis change and measurement
 * of every clone.
 *
 * Clbit 0 holds the message outcome, clbit 1 the port outcome, clbit 2 + k
 * clone k. With TomoBasis::None no clone is measured and only the two Bell
 * clbits exist. Qubit layout is layout_for(spec).
 */
Circuit build_full_circuit(const TelecloningSpec& spec, const MessageSpec& msg, TomoBasis basis);

}  // namespace telecloning::circuits
