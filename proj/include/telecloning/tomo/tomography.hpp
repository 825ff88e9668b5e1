#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace telecloning::tomo {

enum class Pauli { X = 0, Y = 1, Z = 2 };

// Counts are real so that mitigated quasi-counts fit the same type.
struct BitCounts {
    double zeros = 0.0;
    double ones = 0.0;

    double total() const { return zeros + ones; }
};

/// Per clone, counts in the X, Y and Z measurement bases (indexed by Pauli).
using CloneCounts = std::array<BitCounts, 3>;
using BasisCounts = std::vector<CloneCounts>;

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// (n0 - n1) / (n0 + n1) per basis; throws on an empty histogram.
BlochVector pauli_expectations(const BasisCounts& counts, std::size_t clone);
BlochVector pauli_expectations(const CloneCounts& counts);

/// Linear inversion (I + xX + yY + zZ) / 2.
Eigen::Matrix2cd linear_inversion(const BlochVector& r);

/// Closest (Frobenius) unit-trace PSD matrix to a Hermitian matrix, by the
/// fast eigenvalue-truncation rule: drop the most negative eigenvalues and
/// spread their weight evenly over the rest.
Eigen::MatrixXcd project_to_density(const Eigen::MatrixXcd& hermitian);

/// Linear inversion followed by projection; a physical inversion is returned unchanged.
Eigen::Matrix2cd mle_fit(const BlochVector& r);

/// Bloch vector of a 2x2 density matrix.
BlochVector bloch_of(const Eigen::Matrix2cd& rho);

}  // namespace telecloning::tomo
