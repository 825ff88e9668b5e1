#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "telecloning/sim/gate.hpp"
#include "telecloning/sim/rng.hpp"
#include "telecloning/sim/state.hpp"

namespace testing {

using telecloning::sim::GateOp;
using telecloning::sim::RngStream;

inline double angle(RngStream& rng) { return (2 * rng.uniform() - 1) * std::numbers::pi; }

inline telecloning::sim::PureState random_pure(std::size_t n, RngStream& rng) {
    Eigen::VectorXcd v(1 << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    v.normalize();
    return telecloning::sim::PureState::from_amplitudes(v);
}

inline telecloning::sim::MixedState random_mixed(std::size_t n, RngStream& rng) {
    const auto dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    return telecloning::sim::MixedState::from_matrix(rho);
}

// Random gate from the supported set on n qubits, possibly controlled.
inline GateOp random_gate(std::size_t n, RngStream& rng) {
    const std::size_t t = rng.next_u64() % n;
    GateOp g = GateOp::h(t);
    switch (rng.next_u64() % 5) {
        case 0: g = GateOp::ry(t, angle(rng)); break;
        case 1: g = GateOp::rz(t, angle(rng)); break;
        case 2: g = GateOp::h(t); break;
        case 3: g = GateOp::x(t); break;
        default: g = GateOp::z(t); break;
    }
    if (n > 1 && rng.uniform() < 0.4) {
        std::size_t c = rng.next_u64() % n;
        if (c == t) c = (c + 1) % n;
        g = g.controlled(c, rng.uniform() < 0.5 ? telecloning::sim::Polarity::One : telecloning::sim::Polarity::Zero);
    }
    return g;
}

// Dense matrix of a gate on n qubits, built independently of the in-place kernels.
inline Eigen::MatrixXcd dense(const GateOp& g, std::size_t n) {
    const auto dim = std::size_t{1} << n;
    const Eigen::Matrix2cd u = g.matrix();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        bool fires = true;
        for (const auto& c : g.controls()) {
            const bool bit = (col >> c.qubit) & 1U;
            fires = fires && (bit == (c.polarity == telecloning::sim::Polarity::One));
        }
        if (!fires) {
            m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = 1.0;
            continue;
        }
        const std::size_t b = (col >> g.target()) & 1U;
        for (std::size_t a = 0; a < 2; ++a) {
            const std::size_t row = (col & ~(std::size_t{1} << g.target())) | (a << g.target());
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += u(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return m;
}

// Overlap |<a|b>| for comparing up to a global phase.
inline double overlap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return std::abs(a.dot(b)); }

}  // namespace testing
