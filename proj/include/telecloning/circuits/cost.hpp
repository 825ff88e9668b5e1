#pragma once

#include <cstddef>

#include "telecloning/circuits/circuit.hpp"
#include "telecloning/circuits/spec.hpp"

namespace telecloning::circuits {

struct CostReport {
    std::size_t prep_cnots = 0;
    std::size_t dicke_cnots = 0;
    std::size_t bell_cnots = 0;
    std::size_t deferred_cnots = 0;
    std::size_t total = 0;

    bool operator==(const CostReport&) const = default;
};

/// Closed-form CNOT budget. Independent of what the builders emit; the
/// connectivity argument overrides spec.connectivity.
CostReport cnot_cost(const TelecloningSpec& spec, Connectivity connectivity);
CostReport cnot_cost(const TelecloningSpec& spec);

/// Per-unitary Dicke budget (5M^2 - 11M + 6) / 2.
std::size_t dicke_cnot_formula(int m);

struct CostAudit {
    CostReport formula;
    CostReport emitted;              // routing swaps excluded
    std::size_t routing_cnots = 0;   // 3 per routing swap, all inside Dicke segments
};

/// Counts CNOTs per stage of an emitted circuit using its segment marks.
CostReport emitted_cost(const Circuit& circuit);

/// Builds the spec's circuit (message |0>, no tomography) and audits it
/// against the formula.
CostAudit audit_cost(const TelecloningSpec& spec);

}  // namespace telecloning::circuits
