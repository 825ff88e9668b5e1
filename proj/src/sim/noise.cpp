#include "telecloning/sim/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace telecloning::sim {

ConfusionMatrix symmetric_flip(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("flip probability must be in [0, 1]");
    ConfusionMatrix a;
    a << 1.0 - epsilon, epsilon, epsilon, 1.0 - epsilon;
    return a;
}

void NoiseModel::validate() const {
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(p1) || !prob(p2)) throw std::invalid_argument("depolarizing probabilities must be in [0, 1]");
    for (std::size_t q = 0; q < readout.size(); ++q) {
        const auto& a = readout[q];
        for (int j = 0; j < 2; ++j) {
            if (!(a(0, j) >= 0.0) || !(a(1, j) >= 0.0)) {
                throw std::invalid_argument("readout matrix " + std::to_string(q) + " has a negative entry");
            }
            if (std::abs(a(0, j) + a(1, j) - 1.0) > 1e-12) {
                throw std::invalid_argument("readout matrix " + std::to_string(q) + " column does not sum to 1");
            }
        }
    }
}

bool NoiseModel::has_readout() const noexcept {
    for (const auto& a : readout) {
        if (!a.isIdentity(0.0)) return true;
    }
    return false;
}

ConfusionMatrix NoiseModel::readout_for(std::size_t qubit) const {
    if (readout.empty()) return ConfusionMatrix::Identity();
    if (readout.size() == 1) return readout.front();
    if (qubit >= readout.size()) {
        throw std::out_of_range("no readout matrix for qubit " + std::to_string(qubit));
    }
    return readout[qubit];
}

}  // namespace telecloning::sim
