#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "telecloning/circuits/spec.hpp"
#include "telecloning/sim/noise.hpp"

namespace telecloning::harness {

/// Bad user input; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable files; exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Noise JSON: {"p1": .., "p2": .., "readout": [[[a00, a01], [a10, a11]], ...]},
/// one confusion matrix per qubit (or a single one for all). Missing keys mean no noise.
sim::NoiseModel parse_noise_json(const std::string& text);
sim::NoiseModel load_noise_file(const std::string& path);

/// Linearly spaced inclusive angles: theta_y over [0, pi], theta_z over
/// [0, 2 pi] unless a fixed theta_z is given.
struct Grid {
    int n_theta_y = 17;
    int n_theta_z = 17;
    std::optional<double> fixed_theta_z;

    std::vector<double> theta_y_values() const;
    std::vector<double> theta_z_values() const;
    std::size_t size() const { return theta_y_values().size() * theta_z_values().size(); }
};

/// "17x17" -> {17, 17}; a single number means n x 1.
Grid parse_grid(const std::string& text);

std::vector<double> linspace(double lo, double hi, int n);

struct ExperimentConfig {
    std::string circuit = "pcc";
    circuits::Mode mode = circuits::Mode::FeedForward;
    circuits::Connectivity connectivity = circuits::Connectivity::Full;
    Grid grid;
    std::uint64_t shots = 0;  // 0 = exact
    sim::NoiseModel noise;
    std::string noise_source = "none";
    bool mitigate = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;

    /// Spec for this config; `variant` only matters in post-selection mode.
    circuits::TelecloningSpec spec(unsigned variant = 0) const;
    /// Throws ConfigError.
    void validate() const;
    bool mitigation_active() const { return mitigate && shots > 0; }
};

}  // namespace telecloning::harness
