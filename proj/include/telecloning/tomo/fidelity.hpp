#pragma once

#include <cstdint>

#include "telecloning/circuits/spec.hpp"
#include "telecloning/sim/state.hpp"

namespace telecloning::tomo {

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Fraction&) const = default;
};

/// Optimal N -> M universal symmetric cloning fidelity (MN + M + N) / (M(N + 2)),
/// reduced to lowest terms.
Fraction optimal_fidelity_fraction(int n, int m);
double optimal_fidelity(int n, int m);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1] only
/// against round-off at the 1e-12 level.
double fidelity_general(const sim::MixedState& a, const sim::MixedState& b);

/// <psi|rho|psi> for the message state psi = RZ(theta_z) RY(theta_y)|0>.
double fidelity_pure(const circuits::MessageSpec& msg, const Eigen::Matrix2cd& rho);

/// RZ(theta_z) RY(theta_y)|0>.
Eigen::Vector2cd message_vector(const circuits::MessageSpec& msg);
sim::MixedState message_density(const circuits::MessageSpec& msg);

}  // namespace telecloning::tomo
