#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace telecloning::sim {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kEigenTolerance = 1e-10;
// Dense simulation above this is not what the library is for.
inline constexpr std::size_t kMaxQubits = 16;

// Basis index <-> bitstring. Strings are little-endian: character k is qubit k,
// so "10" is qubit 0 set, i.e. index 1.
std::uint64_t index_from_bits(std::string_view bits);
std::string bits_from_index(std::uint64_t index, std::size_t n_bits);

/// State vector over n qubits. Qubit q is bit q of the amplitude index.
class PureState {
public:
    explicit PureState(std::size_t n_qubits);

    static PureState basis(std::size_t n_qubits, std::uint64_t index);
    static PureState from_bits(std::string_view bits);
    /// Validates length and normalization.
    static PureState from_amplitudes(StateVector amplitudes);
    /// Skips normalization checks; for intermediate, unnormalized branch states.
    static PureState unchecked(std::size_t n_qubits, StateVector amplitudes);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
    const StateVector& amplitudes() const noexcept { return amplitudes_; }
    StateVector& amplitudes_mut() noexcept { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

    double norm_squared() const { return amplitudes_.squaredNorm(); }
    void scale(double factor) { amplitudes_ *= factor; }
    void normalize();

private:
    PureState(std::size_t n_qubits, StateVector amplitudes);

    std::size_t n_qubits_;
    StateVector amplitudes_;
};

/// Density operator over n qubits, same index convention as PureState.
class MixedState {
public:
    explicit MixedState(std::size_t n_qubits);

    static MixedState from_pure(const PureState& state);
    /// Validates Hermiticity, unit trace and positivity.
    static MixedState from_matrix(DensityMatrix matrix);
    static MixedState unchecked(std::size_t n_qubits, DensityMatrix matrix);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
    const DensityMatrix& matrix() const noexcept { return matrix_; }
    DensityMatrix& matrix_mut() noexcept { return matrix_; }

    double trace() const { return matrix_.trace().real(); }
    double norm_squared() const { return trace(); }
    double purity() const;
    void scale(double factor) { matrix_ *= factor; }
    void normalize();

private:
    MixedState(std::size_t n_qubits, DensityMatrix matrix);

    std::size_t n_qubits_;
    DensityMatrix matrix_;
};

// Checks a density matrix against the invariants; returns an empty string when valid.
std::string density_matrix_problem(const DensityMatrix& matrix, double tol = kStateTolerance);

}  // namespace telecloning::sim
