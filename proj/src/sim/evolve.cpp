#include "telecloning/sim/evolve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace telecloning::sim {

namespace {

struct Masks {
    std::size_t target_bit;
    std::size_t control_mask;
    std::size_t control_value;
};

Masks masks_for(const GateOp& op, std::size_t n_qubits) {
    if (op.max_qubit() >= n_qubits) {
        throw std::out_of_range("gate touches qubit " + std::to_string(op.max_qubit()) + " but state has " +
                                std::to_string(n_qubits) + " qubits");
    }
    Masks m{std::size_t{1} << op.target(), 0, 0};
    for (const auto& c : op.controls()) {
        const std::size_t bit = std::size_t{1} << c.qubit;
        m.control_mask |= bit;
        if (c.polarity == Polarity::One) m.control_value |= bit;
    }
    return m;
}

// Offsets of every assignment of `qubits`, in little-endian order over the list.
std::vector<std::size_t> offsets_for(const std::vector<std::size_t>& qubits) {
    std::vector<std::size_t> out(std::size_t{1} << qubits.size(), 0);
    for (std::size_t a = 0; a < out.size(); ++a) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if ((a >> j) & 1U) off |= std::size_t{1} << qubits[j];
        }
        out[a] = off;
    }
    return out;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& keep, std::size_t n_qubits) {
    if (keep.empty()) throw std::invalid_argument("partial trace needs a nonempty keep set");
    std::vector<bool> seen(n_qubits, false);
    for (auto q : keep) {
        if (q >= n_qubits) throw std::out_of_range("keep index out of range");
        if (seen[q]) throw std::invalid_argument("duplicate qubit in keep set");
        seen[q] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (!seen[q]) rest.push_back(q);
    }
    return rest;
}

void fully_depolarize(DensityMatrix& rho, std::size_t qubit) {
    const std::size_t bit = std::size_t{1} << qubit;
    const auto dim = static_cast<std::size_t>(rho.rows());
    for (std::size_t b = 0; b < dim; ++b) {
        if (b & bit) continue;
        for (std::size_t a = 0; a < dim; ++a) {
            if (a & bit) continue;
            const Complex t = 0.5 * (rho(a, b) + rho(a | bit, b | bit));
            rho(a, b) = t;
            rho(a | bit, b | bit) = t;
            rho(a, b | bit) = 0.0;
            rho(a | bit, b) = 0.0;
        }
    }
}

}  // namespace

void apply_gate(PureState& state, const GateOp& op) {
    const Masks m = masks_for(op, state.n_qubits());
    const Matrix2c u = op.matrix();
    auto& v = state.amplitudes_mut();
    const std::size_t dim = state.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & m.target_bit) || (i & m.control_mask) != m.control_value) continue;
        const std::size_t j = i | m.target_bit;
        const Complex a = v(i), b = v(j);
        v(i) = u(0, 0) * a + u(0, 1) * b;
        v(j) = u(1, 0) * a + u(1, 1) * b;
    }
}

void apply_gate(MixedState& state, const GateOp& op) {
    const Masks m = masks_for(op, state.n_qubits());
    const Matrix2c u = op.matrix();
    const Matrix2c uc = u.conjugate();
    auto& rho = state.matrix_mut();
    const std::size_t dim = state.dim();
    // Left multiplication acts on row indices, right multiplication by U^dagger
    // on column indices; the control condition is per index in both cases.
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & m.target_bit) || (i & m.control_mask) != m.control_value) continue;
            const std::size_t j = i | m.target_bit;
            const Complex a = rho(i, col), b = rho(j, col);
            rho(i, col) = u(0, 0) * a + u(0, 1) * b;
            rho(j, col) = u(1, 0) * a + u(1, 1) * b;
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & m.target_bit) || (i & m.control_mask) != m.control_value) continue;
        const std::size_t j = i | m.target_bit;
        for (std::size_t row = 0; row < dim; ++row) {
            const Complex a = rho(row, i), b = rho(row, j);
            rho(row, i) = a * uc(0, 0) + b * uc(0, 1);
            rho(row, j) = a * uc(1, 0) + b * uc(1, 1);
        }
    }
}

void apply_depolarizing(MixedState& state, const std::vector<std::size_t>& qubits, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing probability must be in [0, 1]");
    for (auto q : qubits) {
        if (q >= state.n_qubits()) throw std::out_of_range("depolarizing qubit out of range");
    }
    if (p == 0.0 || qubits.empty()) return;
    DensityMatrix mixed = state.matrix();
    for (auto q : qubits) fully_depolarize(mixed, q);
    state.matrix_mut() = (1.0 - p) * state.matrix() + p * mixed;
}

DensityMatrix reduce(const MixedState& state, const std::vector<std::size_t>& keep) {
    const auto rest = complement_of(keep, state.n_qubits());
    const auto ko = offsets_for(keep);
    const auto to = offsets_for(rest);
    const auto& rho = state.matrix();
    DensityMatrix out = DensityMatrix::Zero(static_cast<Eigen::Index>(ko.size()), static_cast<Eigen::Index>(ko.size()));
    for (std::size_t i = 0; i < ko.size(); ++i) {
        for (std::size_t j = 0; j < ko.size(); ++j) {
            Complex acc = 0.0;
            for (auto t : to) acc += rho(ko[i] + t, ko[j] + t);
            out(i, j) = acc;
        }
    }
    return out;
}

DensityMatrix reduce(const PureState& state, const std::vector<std::size_t>& keep) {
    const auto rest = complement_of(keep, state.n_qubits());
    const auto ko = offsets_for(keep);
    const auto to = offsets_for(rest);
    const auto& v = state.amplitudes();
    DensityMatrix out = DensityMatrix::Zero(static_cast<Eigen::Index>(ko.size()), static_cast<Eigen::Index>(ko.size()));
    for (auto t : to) {
        for (std::size_t i = 0; i < ko.size(); ++i) {
            const Complex a = v(ko[i] + t);
            if (a == Complex(0.0)) continue;
            for (std::size_t j = 0; j < ko.size(); ++j) out(i, j) += a * std::conj(v(ko[j] + t));
        }
    }
    return out;
}

MixedState partial_trace(const MixedState& state, const std::vector<std::size_t>& keep) {
    return MixedState::unchecked(keep.size(), reduce(state, keep));
}

MixedState partial_trace(const PureState& state, const std::vector<std::size_t>& keep) {
    return MixedState::unchecked(keep.size(), reduce(state, keep));
}

}  // namespace telecloning::sim
