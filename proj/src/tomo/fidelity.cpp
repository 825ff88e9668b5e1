#include "telecloning/tomo/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace telecloning::tomo {

Fraction optimal_fidelity_fraction(int n, int m) {
    if (n < 1 || m < n) throw std::invalid_argument("optimal fidelity needs M >= N >= 1");
    const std::int64_t num = std::int64_t{m} * n + m + n;
    const std::int64_t den = std::int64_t{m} * (n + 2);
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

double optimal_fidelity(int n, int m) { return optimal_fidelity_fraction(n, m).value(); }

namespace {

// Eigenvalues this small are solver round-off; left in, their square roots
// (~1e-8) would swamp the result, e.g. for a pure first argument.
constexpr double kRoundOff = 1e-13;

Eigen::VectorXd clamped_roots(const Eigen::VectorXd& eigenvalues) {
    return eigenvalues.unaryExpr([](double x) { return x < kRoundOff ? 0.0 : std::sqrt(x); });
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXd roots = clamped_roots(es.eigenvalues());
    return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity_general(const sim::MixedState& a, const sim::MixedState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("fidelity of states with different dimensions");
    const Eigen::MatrixXcd ra = psd_sqrt(a.matrix());
    Eigen::MatrixXcd inner = ra * b.matrix() * ra;
    inner = (inner + inner.adjoint()).eval() / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(inner, Eigen::EigenvaluesOnly);
    const double t = clamped_roots(es.eigenvalues()).sum();
    return t * t;
}

Eigen::Vector2cd message_vector(const circuits::MessageSpec& msg) {
    using namespace std::complex_literals;
    const double c = std::cos(msg.theta_y / 2), s = std::sin(msg.theta_y / 2);
    // RZ contributes e^{-i tz/2} and e^{+i tz/2}.
    return {c * std::exp(-0.5i * msg.theta_z), s * std::exp(0.5i * msg.theta_z)};
}

sim::MixedState message_density(const circuits::MessageSpec& msg) {
    const Eigen::Vector2cd v = message_vector(msg);
    return sim::MixedState::unchecked(1, v * v.adjoint());
}

double fidelity_pure(const circuits::MessageSpec& msg, const Eigen::Matrix2cd& rho) {
    const Eigen::Vector2cd v = message_vector(msg);
    return (v.adjoint() * rho * v)(0, 0).real();
}

}  // namespace telecloning::tomo
