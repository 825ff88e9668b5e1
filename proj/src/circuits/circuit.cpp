#include "telecloning/circuits/circuit.hpp"

#include <stdexcept>

namespace telecloning::circuits {

std::string role_name(QubitRole role) {
    switch (role) {
        case QubitRole::Message: return "message";
        case QubitRole::Ancilla: return "ancilla";
        case QubitRole::Port: return "port";
        case QubitRole::Clone: return "clone";
    }
    return "?";
}

QubitRole role_from_name(const std::string& name) {
    if (name == "message") return QubitRole::Message;
    if (name == "ancilla") return QubitRole::Ancilla;
    if (name == "port") return QubitRole::Port;
    if (name == "clone") return QubitRole::Clone;
    throw std::invalid_argument("unknown qubit role '" + name + "'");
}

Circuit::Circuit(std::size_t n_qubits, std::size_t n_clbits)
    : n_qubits_(n_qubits), n_clbits_(n_clbits), roles_(n_qubits), written_(n_clbits, false) {
    if (n_qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
}

void Circuit::check_qubit(std::size_t q) const {
    if (q >= n_qubits_) throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
}

void Circuit::check_clbit(std::size_t c) const {
    if (c >= n_clbits_) throw std::out_of_range("clbit " + std::to_string(c) + " out of range");
}

void Circuit::set_role(std::size_t qubit, QubitRole role) {
    check_qubit(qubit);
    roles_[qubit] = role;
}

std::optional<QubitRole> Circuit::role(std::size_t qubit) const {
    check_qubit(qubit);
    return roles_[qubit];
}

std::vector<std::size_t> Circuit::qubits_with_role(QubitRole role) const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        if (roles_[q] == role) out.push_back(q);
    }
    return out;
}

Circuit& Circuit::add(const GateOp& gate) {
    check_qubit(gate.max_qubit());
    ops_.emplace_back(gate);
    return *this;
}

Circuit& Circuit::barrier() {
    ops_.emplace_back(Barrier{});
    return *this;
}

Circuit& Circuit::measure(std::size_t qubit, std::size_t clbit) {
    check_qubit(qubit);
    check_clbit(clbit);
    written_[clbit] = true;
    ops_.emplace_back(Measure{qubit, clbit});
    return *this;
}

Circuit& Circuit::conditional(std::size_t clbit, const GateOp& gate) {
    check_clbit(clbit);
    check_qubit(gate.max_qubit());
    if (!written_[clbit]) {
        throw std::invalid_argument("conditional reads clbit " + std::to_string(clbit) + " before any measure writes it");
    }
    ops_.emplace_back(Conditional{clbit, gate});
    return *this;
}

Circuit& Circuit::swap(std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw std::invalid_argument("swap needs two distinct qubits");
    ops_.emplace_back(Swap{a, b});
    return *this;
}

Circuit& Circuit::push(const Operation& op) {
    std::visit(
        [this](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, GateOp>) add(o);
            else if constexpr (std::is_same_v<T, Barrier>) barrier();
            else if constexpr (std::is_same_v<T, Measure>) measure(o.qubit, o.clbit);
            else if constexpr (std::is_same_v<T, Conditional>) conditional(o.clbit, o.gate);
            else swap(o.a, o.b);
        },
        op);
    return *this;
}

Circuit& Circuit::begin_segment(std::string name) {
    segments_.push_back({ops_.size(), std::move(name)});
    return *this;
}

Circuit& Circuit::append(const Circuit& segment, const std::vector<std::size_t>& qubit_map) {
    if (segment.n_clbits() != 0) throw std::invalid_argument("appended segment must not use clbits");
    if (qubit_map.size() != segment.n_qubits()) throw std::invalid_argument("qubit map size mismatch");
    const std::size_t base = ops_.size();
    for (const auto& mark : segment.segments()) segments_.push_back({base + mark.begin, mark.name});
    for (const auto& op : segment.ops()) {
        if (const auto* g = std::get_if<GateOp>(&op)) {
            add(g->remapped(qubit_map));
        } else if (const auto* s = std::get_if<Swap>(&op)) {
            swap(qubit_map.at(s->a), qubit_map.at(s->b));
        } else {
            barrier();
        }
    }
    return *this;
}

std::size_t Circuit::barrier_count() const {
    std::size_t n = 0;
    for (const auto& op : ops_) n += std::holds_alternative<Barrier>(op) ? 1 : 0;
    return n;
}

std::size_t Circuit::conditional_count() const {
    std::size_t n = 0;
    for (const auto& op : ops_) n += std::holds_alternative<Conditional>(op) ? 1 : 0;
    return n;
}

std::optional<std::pair<std::size_t, std::size_t>> Circuit::segment_range(const std::string& name) const {
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (segments_[k].name != name) continue;
        const std::size_t end = k + 1 < segments_.size() ? segments_[k + 1].begin : ops_.size();
        return std::make_pair(segments_[k].begin, end);
    }
    return std::nullopt;
}

std::vector<std::size_t> op_qubits(const Operation& op) {
    std::vector<std::size_t> out;
    auto from_gate = [&](const GateOp& g) {
        out.push_back(g.target());
        for (const auto& c : g.controls()) out.push_back(c.qubit);
    };
    if (const auto* g = std::get_if<GateOp>(&op)) from_gate(*g);
    else if (const auto* c = std::get_if<Conditional>(&op)) from_gate(c->gate);
    else if (const auto* m = std::get_if<Measure>(&op)) out.push_back(m->qubit);
    else if (const auto* s = std::get_if<Swap>(&op)) out = {s->a, s->b};
    return out;
}

}  // namespace telecloning::circuits
