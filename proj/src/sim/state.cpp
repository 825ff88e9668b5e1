#include "telecloning/sim/state.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace telecloning::sim {

namespace {

std::size_t dim_for(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(n_qubits));
    }
    return std::size_t{1} << n_qubits;
}

}  // namespace

std::uint64_t index_from_bits(std::string_view bits) {
    if (bits.empty() || bits.size() > 64) {
        throw std::invalid_argument("bitstring length must be in [1, 64]");
    }
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') {
            index |= std::uint64_t{1} << k;
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bitstring contains a character other than 0/1");
        }
    }
    return index;
}

std::string bits_from_index(std::uint64_t index, std::size_t n_bits) {
    std::string out(n_bits, '0');
    for (std::size_t k = 0; k < n_bits; ++k) {
        if ((index >> k) & 1U) out[k] = '1';
    }
    return out;
}

PureState::PureState(std::size_t n_qubits)
    : n_qubits_(n_qubits), amplitudes_(StateVector::Zero(static_cast<Eigen::Index>(dim_for(n_qubits)))) {
    amplitudes_(0) = 1.0;
}

PureState::PureState(std::size_t n_qubits, StateVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

PureState PureState::basis(std::size_t n_qubits, std::uint64_t index) {
    PureState s(n_qubits);
    if (index >= s.dim()) throw std::out_of_range("basis index out of range");
    s.amplitudes_(0) = 0.0;
    s.amplitudes_(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
}

PureState PureState::from_bits(std::string_view bits) {
    return basis(bits.size(), index_from_bits(bits));
}

PureState PureState::from_amplitudes(StateVector amplitudes) {
    const auto len = static_cast<std::size_t>(amplitudes.size());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    if (len < 2 || (std::size_t{1} << n) != len) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    dim_for(n);
    if (std::abs(amplitudes.squaredNorm() - 1.0) > kStateTolerance) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return PureState(n, std::move(amplitudes));
}

PureState PureState::unchecked(std::size_t n_qubits, StateVector amplitudes) {
    if (static_cast<std::size_t>(amplitudes.size()) != dim_for(n_qubits)) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    return PureState(n_qubits, std::move(amplitudes));
}

void PureState::normalize() {
    const double n = amplitudes_.norm();
    if (n == 0.0) throw std::domain_error("cannot normalize a zero state");
    amplitudes_ /= n;
}

MixedState::MixedState(std::size_t n_qubits)
    : n_qubits_(n_qubits), matrix_(DensityMatrix::Zero(static_cast<Eigen::Index>(dim_for(n_qubits)),
                                                       static_cast<Eigen::Index>(dim_for(n_qubits)))) {
    matrix_(0, 0) = 1.0;
}

MixedState::MixedState(std::size_t n_qubits, DensityMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

MixedState MixedState::from_pure(const PureState& state) {
    return MixedState(state.n_qubits(), state.amplitudes() * state.amplitudes().adjoint());
}

MixedState MixedState::from_matrix(DensityMatrix matrix) {
    if (matrix.rows() != matrix.cols()) throw std::invalid_argument("density matrix must be square");
    const auto len = static_cast<std::size_t>(matrix.rows());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    if (len < 2 || (std::size_t{1} << n) != len) {
        throw std::invalid_argument("density matrix dimension must be a power of two >= 2");
    }
    dim_for(n);
    if (auto problem = density_matrix_problem(matrix); !problem.empty()) {
        throw std::invalid_argument(problem);
    }
    return MixedState(n, std::move(matrix));
}

MixedState MixedState::unchecked(std::size_t n_qubits, DensityMatrix matrix) {
    const auto d = dim_for(n_qubits);
    if (static_cast<std::size_t>(matrix.rows()) != d || static_cast<std::size_t>(matrix.cols()) != d) {
        throw std::invalid_argument("density matrix dimension does not match qubit count");
    }
    return MixedState(n_qubits, std::move(matrix));
}

double MixedState::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return matrix_.squaredNorm();
}

void MixedState::normalize() {
    const double t = trace();
    if (t <= 0.0) throw std::domain_error("cannot normalize a state with non-positive trace");
    matrix_ /= t;
}

std::string density_matrix_problem(const DensityMatrix& matrix, double tol) {
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol) return "density matrix is not Hermitian";
    if (std::abs(matrix.trace() - Complex(1.0, 0.0)) > tol) return "density matrix trace is not 1";
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kEigenTolerance) return "density matrix has a negative eigenvalue";
    return {};
}

}  // namespace telecloning::sim
