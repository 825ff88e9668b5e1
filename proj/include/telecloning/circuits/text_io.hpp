#pragma once

#include <stdexcept>
#include <string>

#include "telecloning/circuits/circuit.hpp"

namespace telecloning::circuits {

enum class Dialect { Qasm2Like, Annotated };

std::string dialect_name(Dialect d);
Dialect parse_dialect(const std::string& text);

struct CircuitTextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Text form of a circuit.
 *
 * Qasm2Like is OpenQASM 2 flavoured: qreg/creg, gate lines, barrier, measure.
 * It has no per-bit classical control, so circuits with conditionals are
 * rejected, and roles and segment marks are dropped. Annotated uses the same
 * gate lines plus `role`, `segment` and `if(c[k]==1)` lines and round-trips
 * the circuit exactly.
 *
 * Controlled gates are written with one prefix letter per control, `c` for a
 * filled control and `o` for an open one, controls first in the operand list:
 * `cx q[0],q[1];`, `ocry(0.5) q[2],q[0],q[1];`. Angles use the shortest
 * decimal that reads back to the same double.
 */
std::string export_circuit_text(const Circuit& circuit, Dialect dialect);

/// Reads either dialect, detected from the first line.
Circuit parse_circuit_text(const std::string& text);

}  // namespace telecloning::circuits
