#pragma once

#include <cstddef>
#include <vector>

#include "telecloning/circuits/circuit.hpp"

namespace telecloning::circuits {

/**
 * Lowers one gate to 1-qubit gates and CNOTs.
 *
 * Supported: any uncontrolled gate; X/Z/RY/RZ with one or two controls of
 * either polarity (open controls are conjugated with X). Controlled H or
 * generic unitaries throw std::invalid_argument.
 */
std::vector<GateOp> decompose(const GateOp& op);

/// Lowered copy: gates decomposed, swaps expanded to three CNOTs. Conditionals
/// must wrap 1-qubit gates.
Circuit lower(const Circuit& circuit);

/// Two-qubit gates after lowering, routing swaps included.
std::size_t count_cnots_emitted(const Circuit& circuit);
/// Only the CNOTs contributed by routing swaps.
std::size_t count_routing_cnots(const Circuit& circuit);
/// CNOTs in ops [begin, end).
std::size_t count_cnots_in_range(const Circuit& circuit, std::size_t begin, std::size_t end);

}  // namespace telecloning::circuits
