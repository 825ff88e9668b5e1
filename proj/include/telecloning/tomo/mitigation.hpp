#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "telecloning/sim/measure.hpp"

namespace telecloning::tomo {

/// a(i, j) = P(read i | prepared j) over m measured bits, little-endian packing.
struct CalibrationMatrix {
    std::size_t n_bits = 0;
    Eigen::MatrixXd a;
};

/// Columns from the histograms of the 2^m basis preparations, keyed by the
/// prepared little-endian bitstring.
CalibrationMatrix build_calibration(const std::map<std::string, sim::Histogram>& preparations);

/**
 * Least-squares readout correction: minimizes |A q - p| over q >= 0 with
 * sum(q) = sum(p). Returned quasi-counts keep the raw shot total.
 */
std::vector<double> mitigate(const std::vector<double>& raw, const CalibrationMatrix& cal);
std::vector<double> mitigate(const sim::Histogram& raw, const CalibrationMatrix& cal);

}  // namespace telecloning::tomo
