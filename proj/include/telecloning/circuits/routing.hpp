#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "telecloning/circuits/circuit.hpp"

namespace telecloning::circuits {

/// Line coupling over qubit indices (q, q+1) plus optional extra edges.
struct LineCoupling {
    std::vector<std::pair<std::size_t, std::size_t>> extra_edges;

    bool adjacent(std::size_t a, std::size_t b) const;
};

/**
 * Appends `gates` (1-qubit or CNOT only) to `out`, inserting adjacent Swaps
 * whenever a CNOT's endpoints are not coupled. The moving qubit walks toward
 * its partner along the line; the original placement is restored with swaps
 * before returning, so the caller's qubit indices stay valid.
 *
 * Greedy and local; no attempt at optimal routing.
 */
void append_routed(Circuit& out, const std::vector<GateOp>& gates, const LineCoupling& coupling);

}  // namespace telecloning::circuits
