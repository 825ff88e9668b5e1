#include "telecloning/circuits/dicke.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "telecloning/circuits/routing.hpp"

namespace telecloning::circuits {

double ry_angle(int x, int y) {
    if (y <= 0 || x < 0 || x > y) throw std::invalid_argument("ry_angle needs 0 <= x <= y and y > 0");
    return 2.0 * std::acos(std::sqrt(static_cast<double>(x) / y));
}

sim::PureState dicke_state(int m, int i) {
    if (m < 1 || i < 0 || i > m) throw std::invalid_argument("dicke_state needs 0 <= i <= M, M >= 1");
    const auto dim = std::size_t{1} << m;
    sim::StateVector v = sim::StateVector::Zero(static_cast<Eigen::Index>(dim));
    std::size_t count = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        if (std::popcount(k) == i) {
            v(static_cast<Eigen::Index>(k)) = 1.0;
            ++count;
        }
    }
    v /= std::sqrt(static_cast<double>(count));
    return sim::PureState::from_amplitudes(std::move(v));
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Positions are 1-based as in the SCS recursion: position p is qubits[n - p],
// so the unary ones-first input becomes |0..01..1> over positions 1..n.

// (|01> -> sqrt(1/n)|01> + sqrt((n-1)/n)|10>) on (a, b) = positions (n-1, n),
// fixing |00> and |11>.
void two_qubit_block(std::vector<GateOp>& out, std::size_t a, std::size_t b, int n) {
    const double phi = std::acos(std::sqrt(1.0 / n));
    out.push_back(GateOp::ry(a, kHalfPi));
    out.push_back(GateOp::cnot(a, b));
    out.push_back(GateOp::ry(a, phi));
    out.push_back(GateOp::ry(b, phi));
    out.push_back(GateOp::cnot(a, b));
    out.push_back(GateOp::ry(a, -kHalfPi));
}

// Shift of a length-l block of ones ending at z = position n: on (x, y, z) =
// positions (n-l, n-l+1, n), |011> -> sqrt(l/n)|011> + sqrt((n-l)/n)|110>.
// CNOT(x->z) around a doubly controlled RY on x. Three CNOTs suffice for the
// controlled rotation because x is |0> except when (y, z) = (1, 0), where the
// block must act as the identity on both x values.
void three_qubit_block(std::vector<GateOp>& out, std::size_t x, std::size_t y, std::size_t z, int l, int n) {
    const double theta = 2.0 * std::acos(std::sqrt(static_cast<double>(l) / n));
    const double a = kHalfPi - theta / 4;
    const double b = theta / 4;
    out.push_back(GateOp::cnot(x, z));
    out.push_back(GateOp::ry(x, a));
    out.push_back(GateOp::cnot(y, x));
    out.push_back(GateOp::ry(x, b));
    out.push_back(GateOp::cnot(z, x));
    out.push_back(GateOp::ry(x, -b));
    out.push_back(GateOp::cnot(y, x));
    out.push_back(GateOp::ry(x, -a));
    out.push_back(GateOp::cnot(x, z));
}

}  // namespace

std::vector<GateOp> dicke_gates(const std::vector<std::size_t>& qubits) {
    const int n_total = static_cast<int>(qubits.size());
    if (n_total < 1) throw std::invalid_argument("Dicke unitary needs at least one qubit");
    std::vector<GateOp> out;
    // SCS_n on positions 1..n, then SCS_{n-1} on 1..n-1, down to SCS_2.
    for (int n = n_total; n >= 2; --n) {
        auto at = [&](int position) { return qubits[static_cast<std::size_t>(n_total - position)]; };
        two_qubit_block(out, at(n - 1), at(n), n);
        for (int l = 2; l <= n - 1; ++l) three_qubit_block(out, at(n - l), at(n - l + 1), at(n), l, n);
    }
    return out;
}

Circuit build_dicke_unitary(int m, Connectivity connectivity) {
    if (m < 1) throw std::invalid_argument("Dicke unitary needs M >= 1");
    Circuit c(static_cast<std::size_t>(m));
    std::vector<std::size_t> qubits(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < qubits.size(); ++k) qubits[k] = k;
    const auto gates = dicke_gates(qubits);
    if (connectivity == Connectivity::LNN) {
        append_routed(c, gates, LineCoupling{});
    } else {
        for (const auto& g : gates) c.add(g);
    }
    return c;
}

}  // namespace telecloning::circuits
