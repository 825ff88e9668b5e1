#include "telecloning/circuits/cost.hpp"

#include <stdexcept>

#include "telecloning/circuits/builder.hpp"
#include "telecloning/circuits/decompose.hpp"

namespace telecloning::circuits {

std::size_t dicke_cnot_formula(int m) {
    if (m < 1) throw std::invalid_argument("Dicke unitary needs M >= 1");
    return static_cast<std::size_t>((5 * m * m - 11 * m + 6) / 2);
}

CostReport cnot_cost(const TelecloningSpec& spec, Connectivity connectivity) {
    spec.validate();
    const auto m = static_cast<std::size_t>(spec.m_clones);
    const bool lnn = connectivity == Connectivity::LNN;
    CostReport r;
    if (spec.with_ancilla) {
        r.prep_cnots = lnn ? 2 * m * m - m : 2 * m - 1;
        r.dicke_cnots = 2 * dicke_cnot_formula(spec.m_clones);
    } else {
        r.prep_cnots = m == 2 ? 1 : (lnn ? 3 : 2);
        r.dicke_cnots = dicke_cnot_formula(spec.m_clones);
    }
    r.bell_cnots = 1;
    if (spec.mode == Mode::Deferred) r.deferred_cnots = lnn ? 4 * m - 1 : 2 * m;
    r.total = r.prep_cnots + r.dicke_cnots + r.bell_cnots + r.deferred_cnots;
    return r;
}

CostReport cnot_cost(const TelecloningSpec& spec) { return cnot_cost(spec, spec.connectivity); }

namespace {

std::size_t segment_cnots(const Circuit& c, const std::string& name, bool skip_swaps) {
    const auto range = c.segment_range(name);
    if (!range) return 0;
    std::size_t n = count_cnots_in_range(c, range->first, range->second);
    if (skip_swaps) {
        for (std::size_t i = range->first; i < range->second; ++i) {
            if (std::holds_alternative<Swap>(c.ops()[i])) n -= 3;
        }
    }
    return n;
}

}  // namespace

CostReport emitted_cost(const Circuit& circuit) {
    CostReport r;
    r.prep_cnots = segment_cnots(circuit, "message-prep", false) + segment_cnots(circuit, "state-prep", false);
    r.dicke_cnots = segment_cnots(circuit, "dicke-ports", true) + segment_cnots(circuit, "dicke-clones", true);
    r.bell_cnots = segment_cnots(circuit, "bell", false);
    r.deferred_cnots = segment_cnots(circuit, "correction", false);
    r.total = r.prep_cnots + r.dicke_cnots + r.bell_cnots + r.deferred_cnots;
    return r;
}

CostAudit audit_cost(const TelecloningSpec& spec) {
    const Circuit c = build_full_circuit(spec, MessageSpec{}, TomoBasis::None);
    CostAudit a;
    a.formula = cnot_cost(spec);
    a.emitted = emitted_cost(c);
    a.routing_cnots = count_routing_cnots(c);
    return a;
}

}  // namespace telecloning::circuits
