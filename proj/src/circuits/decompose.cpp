#include "telecloning/circuits/decompose.hpp"

#include <numbers>
#include <stdexcept>

namespace telecloning::circuits {

using sim::GateKind;
using sim::Polarity;

namespace {

GateOp rotation(GateKind kind, std::size_t target, double angle) {
    return kind == GateKind::RY ? GateOp::ry(target, angle) : GateOp::rz(target, angle);
}

// Positive controls only from here on.
std::vector<GateOp> lower_positive(const GateOp& op) {
    const auto& ctl = op.controls();
    const std::size_t t = op.target();
    if (ctl.empty()) return {op};

    if (ctl.size() == 1) {
        const std::size_t c = ctl[0].qubit;
        switch (op.kind()) {
            case GateKind::X: return {GateOp::cnot(c, t)};
            case GateKind::Z: return {GateOp::h(t), GateOp::cnot(c, t), GateOp::h(t)};
            case GateKind::RY:
            case GateKind::RZ: {
                // X R(a) X = R(-a) for both axes, so the target sees R(0) or R(angle).
                const double half = op.angle() / 2;
                return {rotation(op.kind(), t, half), GateOp::cnot(c, t), rotation(op.kind(), t, -half),
                        GateOp::cnot(c, t)};
            }
            default: break;
        }
    } else if (ctl.size() == 2) {
        const std::size_t a = ctl[0].qubit, b = ctl[1].qubit;
        switch (op.kind()) {
            case GateKind::RY:
            case GateKind::RZ: {
                // Gray-code multiplexor: the four signed quarter angles cancel
                // unless both controls are set.
                const double q = op.angle() / 4;
                return {rotation(op.kind(), t, q),  GateOp::cnot(a, t), rotation(op.kind(), t, -q),
                        GateOp::cnot(b, t),         rotation(op.kind(), t, q), GateOp::cnot(a, t),
                        rotation(op.kind(), t, -q), GateOp::cnot(b, t)};
            }
            case GateKind::X:
            case GateKind::Z: {
                // Standard 6-CNOT Toffoli; CCZ is the same circuit without the outer H pair.
                const double pi4 = std::numbers::pi / 4;
                std::vector<GateOp> out;
                if (op.kind() == GateKind::X) out.push_back(GateOp::h(t));
                const std::vector<GateOp> body = {
                    GateOp::cnot(b, t), GateOp::rz(t, -pi4), GateOp::cnot(a, t), GateOp::rz(t, pi4),
                    GateOp::cnot(b, t), GateOp::rz(t, -pi4), GateOp::cnot(a, t), GateOp::rz(t, pi4),
                    GateOp::rz(b, pi4), GateOp::cnot(a, b),  GateOp::rz(a, pi4), GateOp::rz(b, -pi4),
                    GateOp::cnot(a, b)};
                out.insert(out.end(), body.begin(), body.end());
                if (op.kind() == GateKind::X) out.push_back(GateOp::h(t));
                return out;
            }
            default: break;
        }
    }
    throw std::invalid_argument("cannot decompose " + sim::gate_name(op.kind()) + " with " +
                                std::to_string(ctl.size()) + " controls");
}

}  // namespace

std::vector<GateOp> decompose(const GateOp& op) {
    std::vector<std::size_t> open;
    GateOp positive = [&] {
        GateOp base = [&] {
            switch (op.kind()) {
                case GateKind::RY: return GateOp::ry(op.target(), op.angle());
                case GateKind::RZ: return GateOp::rz(op.target(), op.angle());
                case GateKind::H: return GateOp::h(op.target());
                case GateKind::X: return GateOp::x(op.target());
                case GateKind::Z: return GateOp::z(op.target());
                case GateKind::Unitary: return GateOp::unitary(op.target(), op.matrix());
            }
            throw std::logic_error("unreachable");
        }();
        for (const auto& c : op.controls()) {
            if (c.polarity == Polarity::Zero) open.push_back(c.qubit);
            base = base.controlled(c.qubit);
        }
        return base;
    }();
    auto body = lower_positive(positive);
    if (open.empty()) return body;
    std::vector<GateOp> out;
    for (auto q : open) out.push_back(GateOp::x(q));
    out.insert(out.end(), body.begin(), body.end());
    for (auto q : open) out.push_back(GateOp::x(q));
    return out;
}

Circuit lower(const Circuit& circuit) {
    Circuit out(circuit.n_qubits(), circuit.n_clbits());
    for (std::size_t q = 0; q < circuit.n_qubits(); ++q) {
        if (auto r = circuit.role(q)) out.set_role(q, *r);
    }
    std::size_t next_mark = 0;
    const auto& marks = circuit.segments();
    for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
        while (next_mark < marks.size() && marks[next_mark].begin == i) out.begin_segment(marks[next_mark++].name);
        const auto& op = circuit.ops()[i];
        if (const auto* g = std::get_if<GateOp>(&op)) {
            for (const auto& piece : decompose(*g)) out.add(piece);
        } else if (const auto* s = std::get_if<Swap>(&op)) {
            out.add(GateOp::cnot(s->a, s->b)).add(GateOp::cnot(s->b, s->a)).add(GateOp::cnot(s->a, s->b));
        } else if (const auto* c = std::get_if<Conditional>(&op)) {
            if (!c->gate.controls().empty()) throw std::invalid_argument("conditional multi-qubit gates are not lowered");
            out.push(op);
        } else {
            out.push(op);
        }
    }
    while (next_mark < marks.size()) out.begin_segment(marks[next_mark++].name);
    return out;
}

namespace {

std::size_t cnots_of(const GateOp& g) {
    if (g.controls().empty()) return 0;
    std::size_t n = 0;
    for (const auto& piece : decompose(g)) n += piece.controls().empty() ? 0 : 1;
    return n;
}

std::size_t cnots_of(const Operation& op) {
    if (const auto* g = std::get_if<GateOp>(&op)) return cnots_of(*g);
    if (const auto* c = std::get_if<Conditional>(&op)) return cnots_of(c->gate);
    if (std::holds_alternative<Swap>(op)) return 3;
    return 0;
}

}  // namespace

std::size_t count_cnots_in_range(const Circuit& circuit, std::size_t begin, std::size_t end) {
    std::size_t n = 0;
    for (std::size_t i = begin; i < end && i < circuit.ops().size(); ++i) n += cnots_of(circuit.ops()[i]);
    return n;
}

std::size_t count_cnots_emitted(const Circuit& circuit) {
    return count_cnots_in_range(circuit, 0, circuit.ops().size());
}

std::size_t count_routing_cnots(const Circuit& circuit) {
    std::size_t n = 0;
    for (const auto& op : circuit.ops()) n += std::holds_alternative<Swap>(op) ? 3 : 0;
    return n;
}

}  // namespace telecloning::circuits
