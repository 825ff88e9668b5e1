#include "telecloning/tomo/tomography.hpp"

#include <stdexcept>

namespace telecloning::tomo {

BlochVector pauli_expectations(const CloneCounts& counts) {
    auto expectation = [](const BitCounts& c) {
        if (!(c.total() > 0.0)) throw std::invalid_argument("tomography histogram has no shots");
        return (c.zeros - c.ones) / c.total();
    };
    return {expectation(counts[0]), expectation(counts[1]), expectation(counts[2])};
}

BlochVector pauli_expectations(const BasisCounts& counts, std::size_t clone) {
    if (clone >= counts.size()) throw std::out_of_range("clone index out of range");
    return pauli_expectations(counts[clone]);
}

Eigen::Matrix2cd linear_inversion(const BlochVector& r) {
    using C = std::complex<double>;
    Eigen::Matrix2cd rho;
    rho << C(1 + r.z, 0), C(r.x, -r.y), C(r.x, r.y), C(1 - r.z, 0);
    return rho / 2.0;
}

Eigen::MatrixXcd project_to_density(const Eigen::MatrixXcd& hermitian) {
    const Eigen::Index d = hermitian.rows();
    if (d == 0 || hermitian.cols() != d) throw std::invalid_argument("projection needs a square matrix");
    const Eigen::MatrixXcd h = (hermitian + hermitian.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXd mu = es.eigenvalues() / h.trace().real();  // ascending

    // Walk up from the smallest eigenvalue; once one survives the shared
    // deficit, all larger ones do too.
    double deficit = 0.0;
    Eigen::Index i = 0;
    for (; i < d; ++i) {
        const double remaining = static_cast<double>(d - i);
        if (mu(i) + deficit / remaining >= 0.0) break;
        deficit += mu(i);
        mu(i) = 0.0;
    }
    const double share = deficit / static_cast<double>(d - i);
    for (Eigen::Index j = i; j < d; ++j) mu(j) += share;
    return es.eigenvectors() * mu.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::Matrix2cd mle_fit(const BlochVector& r) {
    const Eigen::Matrix2cd lin = linear_inversion(r);
    if (r.x * r.x + r.y * r.y + r.z * r.z <= 1.0) return lin;
    return project_to_density(lin);
}

BlochVector bloch_of(const Eigen::Matrix2cd& rho) {
    return {2 * rho(1, 0).real(), 2 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

}  // namespace telecloning::tomo
