#include "telecloning/harness/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace telecloning::harness {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), ptr);
}

namespace {

constexpr const char* kSweepHeader = "circuit,mode,connectivity,theta_y,theta_z,clone,shots,mitigated,fidelity,seed";

double parse_double(const std::string& s) {
    if (s == "nan") return std::nan("");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ConfigError("bad number '" + s + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) throw ConfigError("bad integer '" + s + "'");
    return v;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ConfigError("bad boolean '" + s + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

json config_echo(const ExperimentConfig& c) {
    json readout = json::array();
    for (const auto& a : c.noise.readout) readout.push_back({{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}});
    json j;
    j["circuit"] = c.circuit;
    j["mode"] = circuits::mode_name(c.mode);
    j["connectivity"] = circuits::connectivity_name(c.connectivity);
    j["grid"] = {{"n_theta_y", c.grid.n_theta_y}, {"n_theta_z", c.grid.fixed_theta_z ? 1 : c.grid.n_theta_z}};
    if (c.grid.fixed_theta_z) j["grid"]["theta_z"] = *c.grid.fixed_theta_z;
    j["shots"] = c.shots;
    j["exact"] = c.shots == 0;
    j["mitigate"] = c.mitigate;
    if (c.mitigate && c.shots == 0) j["note"] = "mitigation has no effect in exact mode";
    j["seed"] = c.seed;
    j["noise"] = {{"source", c.noise_source}, {"p1", c.noise.p1}, {"p2", c.noise.p2}, {"readout", readout}};
    j["bit_order"] = "little-endian: qubit 0 is the least significant bit";
    return j;
}

json record_json(const SweepRecord& r) {
    return {{"circuit", r.circuit},
            {"mode", circuits::mode_name(r.mode)},
            {"connectivity", circuits::connectivity_name(r.connectivity)},
            {"theta_y", r.theta_y},
            {"theta_z", r.theta_z},
            {"clone", r.clone},
            {"shots", r.shots},
            {"mitigated", r.mitigated},
            {"fidelity", r.fidelity},
            {"seed", r.seed}};
}

json nan_safe(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

}  // namespace

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << kSweepHeader << "\n";
    for (const auto& r : records) {
        out << r.circuit << ',' << circuits::mode_name(r.mode) << ',' << circuits::connectivity_name(r.connectivity)
            << ',' << format_double(r.theta_y) << ',' << format_double(r.theta_z) << ',' << r.clone << ',' << r.shots
            << ',' << bool_text(r.mitigated) << ',' << format_double(r.fidelity) << ',' << r.seed << "\n";
    }
    return out.str();
}

std::vector<SweepRecord> parse_sweep_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || split_csv(line) != split_csv(kSweepHeader)) throw ConfigError("unexpected sweep CSV header");
    std::vector<SweepRecord> out;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv(line);
        if (f.size() != 10) throw ConfigError("sweep CSV row needs 10 fields");
        try {
            out.push_back({f[0], circuits::parse_mode(f[1]), circuits::parse_connectivity(f[2]), parse_double(f[3]),
                           parse_double(f[4]), static_cast<std::size_t>(parse_u64(f[5])), parse_u64(f[6]),
                           parse_bool(f[7]), parse_double(f[8]), parse_u64(f[9])});
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    return out;
}

std::string sweep_json(const std::vector<SweepRecord>& records, const ExperimentConfig& config) {
    json j;
    j["config"] = config_echo(config);
    j["columns"] = split_csv(kSweepHeader);
    j["records"] = json::array();
    for (const auto& r : records) j["records"].push_back(record_json(r));
    return j.dump(2) + "\n";
}

std::vector<SweepRecord> parse_sweep_json(const std::string& text) {
    std::vector<SweepRecord> out;
    try {
        const auto j = json::parse(text);
        for (const auto& r : j.at("records")) {
            out.push_back({r.at("circuit").get<std::string>(), circuits::parse_mode(r.at("mode").get<std::string>()),
                           circuits::parse_connectivity(r.at("connectivity").get<std::string>()),
                           r.at("theta_y").get<double>(), r.at("theta_z").get<double>(),
                           r.at("clone").get<std::size_t>(), r.at("shots").get<std::uint64_t>(),
                           r.at("mitigated").get<bool>(), r.at("fidelity").get<double>(),
                           r.at("seed").get<std::uint64_t>()});
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad sweep JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "circuit,mode,connectivity,mitigated,clone,count,mean_fidelity,sd\n";
    for (const auto& r : rows) {
        out << r.circuit << ',' << circuits::mode_name(r.mode) << ',' << circuits::connectivity_name(r.connectivity)
            << ',' << bool_text(r.mitigated) << ',' << (r.clone ? std::to_string(*r.clone) : std::string("all")) << ','
            << r.count << ',' << format_double(r.mean) << ',' << format_double(r.sd) << "\n";
    }
    return out.str();
}

std::string postselect_csv(const std::vector<PostselectRecord>& records) {
    std::ostringstream out;
    std::size_t n_clones = records.empty() ? 0 : records.front().clone_fidelities.size();
    out << "theta_y,theta_z,variant,kept_proportion";
    for (std::size_t k = 0; k < n_clones; ++k) out << ",fidelity_clone" << k;
    out << ",shots,seed\n";
    for (const auto& r : records) {
        out << format_double(r.theta_y) << ',' << format_double(r.theta_z) << ',' << circuits::variant_label(r.variant)
            << ',' << format_double(r.kept_proportion);
        for (double f : r.clone_fidelities) out << ',' << format_double(f);
        out << ',' << r.shots << ',' << r.seed << "\n";
    }
    return out.str();
}

std::string postselect_json(const std::vector<PostselectRecord>& records, const ExperimentConfig& config) {
    json j;
    j["config"] = config_echo(config);
    j["variant_label"] = "port bit, then message bit";
    j["records"] = json::array();
    for (const auto& r : records) {
        json fids = json::array();
        for (double f : r.clone_fidelities) fids.push_back(nan_safe(f));
        j["records"].push_back({{"theta_y", r.theta_y},
                                {"theta_z", r.theta_z},
                                {"variant", circuits::variant_label(r.variant)},
                                {"kept_proportion", r.kept_proportion},
                                {"clone_fidelities", fids},
                                {"shots", r.shots},
                                {"seed", r.seed}});
    }
    return j.dump(2) + "\n";
}

std::string cost_csv(const std::vector<CostRow>& rows) {
    std::ostringstream out;
    out << "circuit,mode,connectivity,prep,dicke,bell,deferred,total,"
           "emitted_prep,emitted_dicke,emitted_bell,emitted_deferred,emitted_total,routing\n";
    for (const auto& r : rows) {
        const auto& f = r.audit.formula;
        const auto& e = r.audit.emitted;
        out << r.circuit << ',' << circuits::mode_name(r.mode) << ',' << circuits::connectivity_name(r.connectivity)
            << ',' << f.prep_cnots << ',' << f.dicke_cnots << ',' << f.bell_cnots << ',' << f.deferred_cnots << ','
            << f.total << ',' << e.prep_cnots << ',' << e.dicke_cnots << ',' << e.bell_cnots << ','
            << e.deferred_cnots << ',' << e.total << ',' << r.audit.routing_cnots << "\n";
    }
    return out.str();
}

std::string calibration_json(const tomo::CalibrationMatrix& cal, const std::vector<std::size_t>& qubits,
                             const ExperimentConfig& config) {
    json j;
    j["config"] = config_echo(config);
    j["qubits"] = qubits;
    json rows = json::array();
    for (Eigen::Index i = 0; i < cal.a.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < cal.a.cols(); ++k) row.push_back(cal.a(i, k));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["convention"] = "matrix[i][j] = P(read i | prepared j), little-endian over the listed qubits";
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::error_code ec;
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    if (ec) throw IoError("cannot create directory '" + parent.string() + "': " + ec.message());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace telecloning::harness
