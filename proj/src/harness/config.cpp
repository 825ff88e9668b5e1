#include "telecloning/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace telecloning::harness {

sim::NoiseModel parse_noise_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("noise file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("noise JSON must be an object");
    sim::NoiseModel noise;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "p1") {
                noise.p1 = value.get<double>();
            } else if (key == "p2") {
                noise.p2 = value.get<double>();
            } else if (key == "readout") {
                for (const auto& m : value) {
                    if (!m.is_array() || m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) {
                        throw ConfigError("each readout entry must be a 2x2 matrix");
                    }
                    sim::ConfusionMatrix a;
                    a << m[0][0].get<double>(), m[0][1].get<double>(), m[1][0].get<double>(), m[1][1].get<double>();
                    noise.readout.push_back(a);
                }
            } else {
                throw ConfigError("unknown noise key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad noise value: ") + e.what());
    }
    try {
        noise.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid noise model: ") + e.what());
    }
    return noise;
}

sim::NoiseModel load_noise_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read noise file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_noise_json(buf.str());
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw ConfigError("grid needs at least one point per axis");
    if (n == 1) return {lo};
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
    v.back() = hi;
    return v;
}

std::vector<double> Grid::theta_y_values() const { return linspace(0.0, std::numbers::pi, n_theta_y); }

std::vector<double> Grid::theta_z_values() const {
    if (fixed_theta_z) return {*fixed_theta_z};
    return linspace(0.0, 2 * std::numbers::pi, n_theta_z);
}

Grid parse_grid(const std::string& text) {
    auto number = [&](const std::string& s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) throw ConfigError("bad grid '" + text + "'");
        return v;
    };
    Grid g;
    const auto x = text.find('x');
    if (x == std::string::npos) {
        g.n_theta_y = number(text);
        g.n_theta_z = 1;
    } else {
        g.n_theta_y = number(text.substr(0, x));
        g.n_theta_z = number(text.substr(x + 1));
    }
    return g;
}

circuits::TelecloningSpec ExperimentConfig::spec(unsigned variant) const {
    circuits::TelecloningSpec s;
    try {
        s = circuits::parse_circuit_id(circuit);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    s.mode = mode;
    s.connectivity = connectivity;
    s.variant = variant;
    return s;
}

void ExperimentConfig::validate() const {
    (void)spec();
    if (grid.n_theta_y < 1 || grid.n_theta_z < 1) throw ConfigError("grid needs at least one point per axis");
    if (grid.fixed_theta_z && !(*grid.fixed_theta_z >= 0.0 && *grid.fixed_theta_z <= 2 * std::numbers::pi + 1e-12)) {
        throw ConfigError("theta_z must be in [0, 2 pi]");
    }
    if (threads == 0) throw ConfigError("threads must be >= 1");
    try {
        noise.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace telecloning::harness
