#include "telecloning/circuits/builder.hpp"

#include <numbers>
#include <stdexcept>

#include "telecloning/circuits/dicke.hpp"

namespace telecloning::circuits {

namespace {

constexpr double kPi = std::numbers::pi;

// RY(gamma) on `target` when `control` is 1, valid only while the target is
// still |0>: one CNOT instead of two.
void controlled_ry_on_zero(Circuit& c, std::size_t control, std::size_t target, double gamma) {
    const double a = gamma / 2 - kPi / 2;
    c.add(GateOp::ry(target, -a));
    c.add(GateOp::cnot(control, target));
    c.add(GateOp::ry(target, a));
}

void append_dicke(Circuit& c, const std::vector<std::size_t>& unary_order, Connectivity conn) {
    c.append(build_dicke_unitary(static_cast<int>(unary_order.size()), conn), unary_order);
}

Circuit with_ancilla_state(int m, Connectivity conn) {
    const auto mm = static_cast<std::size_t>(m);
    Circuit c(2 * mm);
    c.begin_segment("state-prep");
    // Unary superposition over the ancilla+port block, weight 1/(M+1) each.
    c.add(GateOp::ry(0, ry_angle(1, m + 1)));
    for (int p = 2; p <= m; ++p) {
        controlled_ry_on_zero(c, static_cast<std::size_t>(p - 2), static_cast<std::size_t>(p - 1), ry_angle(1, m + 2 - p));
    }

    std::vector<std::size_t> port_order(mm), clone_order(mm);
    for (std::size_t j = 0; j < mm; ++j) port_order[j] = j;
    if (conn == Connectivity::Full) {
        for (std::size_t j = 0; j < mm; ++j) {
            c.add(GateOp::cnot(j, mm + j));
            clone_order[j] = mm + j;
        }
    } else {
        // Copy qubit s onto its mirror 2M-1-s, innermost pair first. The pairs
        // already copied sit between s and its mirror and cancel in the parity
        // ladder, so the ladder delivers exactly bit s.
        for (std::size_t s = mm; s-- > 0;) {
            const std::size_t t = 2 * mm - 1 - s;
            for (std::size_t j = s; j < t; ++j) c.add(GateOp::cnot(j, j + 1));
            for (std::size_t j = t - 1; j-- > s;) c.add(GateOp::cnot(j, j + 1));
        }
        for (std::size_t j = 0; j < mm; ++j) clone_order[j] = 2 * mm - 1 - j;
    }
    c.begin_segment("dicke-ports");
    append_dicke(c, port_order, conn);
    c.begin_segment("dicke-clones");
    append_dicke(c, clone_order, conn);
    return c;
}

Circuit pcc_state(Connectivity conn) {
    Circuit c(3);
    c.begin_segment("state-prep");
    c.add(GateOp::ry(0, ry_angle(2, 3)));
    c.add(GateOp::cnot(0, 1));
    c.begin_segment("dicke-clones");
    append_dicke(c, {1, 2}, conn);
    return c;
}

Circuit pccc_state(Connectivity conn) {
    // Before symmetrizing, the port and clones hold
    //   sqrt(1/2)|0,000> + sqrt(1/6)(|0,100> + |1,100> + |1,110>).
    constexpr std::size_t p = 0, c1 = 1, c2 = 2;
    Circuit c(4);
    c.begin_segment("state-prep");
    c.add(GateOp::ry(p, ry_angle(2, 3)));
    if (conn == Connectivity::Full) {
        c.add(GateOp::ry(c1, kPi / 6));
        c.add(GateOp::cnot(p, c1));
        c.add(GateOp::ry(c1, kPi / 6));
        c.add(GateOp::ry(c2, kPi / 4));
        c.add(GateOp::cnot(p, c2));
        c.add(GateOp::ry(c2, -kPi / 4));
    } else {
        // C2 can only hear the port through C1, so copy first and split C1 after.
        c.add(GateOp::cnot(p, c1));
        c.add(GateOp::ry(c2, kPi / 4));
        c.add(GateOp::cnot(c1, c2));
        c.add(GateOp::ry(c2, -kPi / 4));
        c.add(GateOp::ry(c1, -kPi / 3));
        c.add(GateOp::cnot(p, c1));
        c.add(GateOp::ry(c1, 2 * kPi / 3));
    }
    c.begin_segment("dicke-clones");
    append_dicke(c, {1, 2, 3}, conn);
    return c;
}

void add_tomography_basis(Circuit& c, const std::vector<std::size_t>& clones, TomoBasis basis) {
    for (auto q : clones) {
        if (basis == TomoBasis::X) {
            c.add(GateOp::h(q));
        } else if (basis == TomoBasis::Y) {
            c.add(GateOp::rz(q, -kPi / 2));
            c.add(GateOp::h(q));
        }
    }
}

// Deferred corrections on a line, written in the frame before the message
// Hadamard. There a Z on every clone controlled by the message becomes
// "message ^= parity(clones)", which a ladder gathers into C1 and a borrowed
// pass through the port delivers. That pass also adds the port bit into the
// message; after the Hadamard it is a CZ(port, message) right before both are
// measured in Z, so it changes nothing observable.
void lnn_deferred_corrections(Circuit& c, const Layout& l) {
    const auto& cl = l.clones;
    const std::size_t m = cl.size();
    // X fan-out from the port along the clone line.
    for (std::size_t k = m - 1; k >= 1; --k) c.add(GateOp::cnot(cl[k - 1], cl[k]));
    c.add(GateOp::cnot(l.port, cl[0]));
    for (std::size_t k = 1; k < m; ++k) c.add(GateOp::cnot(cl[k - 1], cl[k]));
    // Parity of the clones into C1.
    for (std::size_t k = m - 1; k >= 1; --k) c.add(GateOp::cnot(cl[k], cl[k - 1]));
    c.add(GateOp::cnot(cl[0], l.port));
    c.add(GateOp::cnot(l.port, l.message));
    c.add(GateOp::cnot(cl[0], l.port));
    for (std::size_t k = 1; k < m; ++k) c.add(GateOp::cnot(cl[k], cl[k - 1]));
    c.add(GateOp::h(l.message));
}

}  // namespace

Circuit build_telecloning_state(int m, bool with_ancilla, Connectivity connectivity) {
    if (m < 2) throw std::invalid_argument("telecloning needs at least 2 clones");
    if (with_ancilla) return with_ancilla_state(m, connectivity);
    if (m == 2) return pcc_state(connectivity);
    if (m == 3) return pccc_state(connectivity);
    throw std::invalid_argument("no ancilla-free telecloning state for " + std::to_string(m) + " clones");
}

Circuit build_full_circuit(const TelecloningSpec& spec, const MessageSpec& msg, TomoBasis basis) {
    spec.validate();
    msg.validate();
    const Layout l = layout_for(spec);
    const bool measure_clones = basis != TomoBasis::None;
    const std::size_t n_clbits = 2 + (measure_clones ? l.clones.size() : 0);
    Circuit c(l.n_qubits, n_clbits);
    c.set_role(l.message, QubitRole::Message);
    for (auto q : l.ancillas) c.set_role(q, QubitRole::Ancilla);
    c.set_role(l.port, QubitRole::Port);
    for (auto q : l.clones) c.set_role(q, QubitRole::Clone);

    c.begin_segment("message-prep");
    c.add(GateOp::ry(l.message, msg.theta_y));
    c.add(GateOp::rz(l.message, msg.theta_z));

    std::vector<std::size_t> block_map;
    for (std::size_t q = 1; q < l.n_qubits; ++q) block_map.push_back(q);
    c.append(build_telecloning_state(spec.m_clones, spec.with_ancilla, spec.connectivity), block_map);
    c.barrier();

    const bool deferred = spec.mode == Mode::Deferred;
    const bool lnn_deferred = deferred && spec.connectivity == Connectivity::LNN;
    c.begin_segment("bell");
    c.add(GateOp::cnot(l.message, l.port));
    if (!lnn_deferred) c.add(GateOp::h(l.message));
    if (!deferred) {
        c.measure(l.message, 0);
        c.measure(l.port, 1);
    }

    c.begin_segment("correction");
    switch (spec.mode) {
        case Mode::FeedForward:
            for (auto q : l.clones) c.conditional(1, GateOp::x(q));
            for (auto q : l.clones) c.conditional(0, GateOp::z(q));
            break;
        case Mode::PostSelect:
            if (spec.variant & 2U) {
                for (auto q : l.clones) c.add(GateOp::x(q));
            }
            if (spec.variant & 1U) {
                for (auto q : l.clones) c.add(GateOp::z(q));
            }
            break;
        case Mode::Deferred:
            if (spec.connectivity == Connectivity::LNN) {
                lnn_deferred_corrections(c, l);
            } else {
                for (auto q : l.clones) c.add(GateOp::cnot(l.port, q));
                for (auto q : l.clones) c.add(GateOp::cz(l.message, q));
            }
            break;
    }
    c.barrier();

    c.begin_segment("tomography");
    if (measure_clones) add_tomography_basis(c, l.clones, basis);
    if (deferred) {
        if (measure_clones) c.barrier();
        c.measure(l.message, 0);
        c.measure(l.port, 1);
    }
    if (measure_clones) {
        for (std::size_t k = 0; k < l.clones.size(); ++k) c.measure(l.clones[k], 2 + k);
    }
    return c;
}

}  // namespace telecloning::circuits
