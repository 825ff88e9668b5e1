#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace telecloning::sim {

/// A(i, j) = P(read i | true j); columns sum to 1.
using ConfusionMatrix = Eigen::Matrix2d;

ConfusionMatrix symmetric_flip(double epsilon);

struct NoiseModel {
    double p1 = 0.0;  // after every 1-qubit gate
    double p2 = 0.0;  // after every 2-qubit gate
    // Empty: ideal readout. One entry: used for every qubit. Otherwise indexed by qubit.
    std::vector<ConfusionMatrix> readout;

    void validate() const;
    bool has_depolarizing() const noexcept { return p1 > 0.0 || p2 > 0.0; }
    bool has_readout() const noexcept;
    ConfusionMatrix readout_for(std::size_t qubit) const;
};

}  // namespace telecloning::sim
