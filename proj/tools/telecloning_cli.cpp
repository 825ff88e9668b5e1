// Command line front end: sweep, postselect, cost, export-circuit, calibrate.
// Exit codes: 0 success, 2 bad configuration, 3 file I/O failure.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "telecloning/circuits/builder.hpp"
#include "telecloning/circuits/text_io.hpp"
#include "telecloning/harness/config.hpp"
#include "telecloning/harness/output.hpp"
#include "telecloning/harness/postselect.hpp"
#include "telecloning/harness/summary.hpp"
#include "telecloning/harness/sweep.hpp"

namespace tc = telecloning;
using tc::harness::ConfigError;
using tc::harness::ExperimentConfig;

namespace {

constexpr int kConfigExit = 2;
constexpr int kIoExit = 3;

struct CommonOptions {
    std::string circuit = "pcc";
    std::string mode = "feedforward";
    std::string connectivity = "full";
    std::string grid = "17x17";
    double theta_z = -1.0;  // < 0: sweep theta_z over the grid
    std::uint64_t shots = 0;
    std::string noise_file;
    bool mitigate = false;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string out = ".";
    std::string format = "csv";
};

void add_experiment_flags(CLI::App* cmd, CommonOptions& o, bool with_mode) {
    cmd->add_option("--circuit", o.circuit, "pcc | apcc | pccc | aapccc | ancilla:M")->capture_default_str();
    if (with_mode) cmd->add_option("--mode", o.mode, "feedforward | deferred | postselect")->capture_default_str();
    cmd->add_option("--connectivity", o.connectivity, "lnn | full")->capture_default_str();
    cmd->add_option("--grid", o.grid, "NyxNz inclusive grid over [0,pi] x [0,2pi]")->capture_default_str();
    cmd->add_option("--theta-z", o.theta_z, "fix theta_z instead of sweeping it");
    cmd->add_option("--shots", o.shots, "shots per circuit, 0 = exact")->capture_default_str();
    cmd->add_option("--noise", o.noise_file, "noise model JSON {p1, p2, readout}");
    cmd->add_flag("--mitigate", o.mitigate, "readout mitigation from simulated calibration circuits");
    cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
    cmd->add_option("--threads", o.threads, "worker threads")->capture_default_str();
    cmd->add_option("--out", o.out, "output directory")->capture_default_str();
    cmd->add_option("--format", o.format, "csv | json")->capture_default_str();
}

ExperimentConfig to_config(const CommonOptions& o) {
    ExperimentConfig c;
    c.circuit = o.circuit;
    try {
        c.mode = tc::circuits::parse_mode(o.mode);
        c.connectivity = tc::circuits::parse_connectivity(o.connectivity);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    c.grid = tc::harness::parse_grid(o.grid);
    if (o.theta_z >= 0.0) c.grid.fixed_theta_z = o.theta_z;
    c.shots = o.shots;
    if (!o.noise_file.empty()) {
        c.noise = tc::harness::load_noise_file(o.noise_file);
        c.noise_source = o.noise_file;
    }
    c.mitigate = o.mitigate;
    c.seed = o.seed;
    c.threads = o.threads;
    if (o.format != "csv" && o.format != "json") throw ConfigError("format must be csv or json");
    c.validate();
    return c;
}

std::string out_path(const CommonOptions& o, const std::string& name) { return o.out + "/" + name; }

void run_sweep_cmd(const CommonOptions& o) {
    const auto cfg = to_config(o);
    const auto records = tc::harness::run_sweep(cfg);
    if (o.format == "json") {
        tc::harness::write_text_file(out_path(o, "sweep.json"), tc::harness::sweep_json(records, cfg));
    } else {
        tc::harness::write_text_file(out_path(o, "sweep.csv"), tc::harness::sweep_csv(records));
    }
    const auto rows = tc::harness::summarize(records);
    const auto summary = tc::harness::summary_csv(rows);
    tc::harness::write_text_file(out_path(o, "summary.csv"), summary);
    std::cout << summary;
    if (cfg.mitigate && cfg.shots == 0) std::cerr << "note: --mitigate has no effect in exact mode (--shots 0)\n";
}

void run_postselect_cmd(const CommonOptions& o) {
    auto opts = o;
    opts.mode = "postselect";
    auto cfg = to_config(opts);
    if (!cfg.grid.fixed_theta_z) cfg.grid.fixed_theta_z = std::numbers::pi / 2;
    const auto records = tc::harness::postselect_analysis(cfg);
    if (o.format == "json") {
        tc::harness::write_text_file(out_path(o, "postselect.json"), tc::harness::postselect_json(records, cfg));
    } else {
        const auto text = tc::harness::postselect_csv(records);
        tc::harness::write_text_file(out_path(o, "postselect.csv"), text);
        std::cout << text;
    }
}

void run_cost_cmd(const std::string& connectivity, const std::string& out) {
    std::vector<tc::harness::CostRow> rows;
    auto add = [&](tc::circuits::Connectivity c) {
        const auto t = tc::harness::cost_table(c);
        rows.insert(rows.end(), t.begin(), t.end());
    };
    if (connectivity == "all") {
        add(tc::circuits::Connectivity::LNN);
        add(tc::circuits::Connectivity::Full);
    } else {
        try {
            add(tc::circuits::parse_connectivity(connectivity));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    const auto text = tc::harness::cost_csv(rows);
    if (!out.empty()) tc::harness::write_text_file(out + "/cost.csv", text);
    std::cout << text;
}

struct ExportOptions {
    std::string circuit = "pcc";
    std::string mode = "feedforward";
    std::string connectivity = "full";
    std::string variant = "00";
    double theta_y = 0.0;
    double theta_z = 0.0;
    std::string basis = "z";
    std::string dialect = "annotated";
    std::string out;
};

void run_export_cmd(const ExportOptions& o) {
    tc::circuits::TelecloningSpec spec;
    tc::circuits::TomoBasis basis = tc::circuits::TomoBasis::None;
    tc::circuits::Dialect dialect{};
    try {
        spec = tc::circuits::parse_circuit_id(o.circuit);
        spec.mode = tc::circuits::parse_mode(o.mode);
        spec.connectivity = tc::circuits::parse_connectivity(o.connectivity);
        spec.variant = tc::circuits::parse_variant(o.variant);
        if (o.basis == "x") basis = tc::circuits::TomoBasis::X;
        else if (o.basis == "y") basis = tc::circuits::TomoBasis::Y;
        else if (o.basis == "z") basis = tc::circuits::TomoBasis::Z;
        else if (o.basis != "none") throw std::invalid_argument("basis must be x, y, z or none");
        dialect = tc::circuits::parse_dialect(o.dialect);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    std::string text;
    try {
        const auto c = tc::circuits::build_full_circuit(spec, {o.theta_y, o.theta_z}, basis);
        text = tc::circuits::export_circuit_text(c, dialect);
    } catch (const tc::circuits::CircuitTextError& e) {
        throw ConfigError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (o.out.empty()) {
        std::cout << text;
    } else {
        tc::harness::write_text_file(o.out, text);
    }
}

void run_calibrate_cmd(const CommonOptions& o) {
    auto cfg = to_config(o);
    if (cfg.shots == 0) throw ConfigError("calibration needs --shots > 0");
    const auto spec = cfg.spec();
    const auto layout = tc::circuits::layout_for(spec);
    std::vector<std::size_t> qubits;
    if (spec.mode == tc::circuits::Mode::PostSelect) qubits = {layout.message, layout.port};
    qubits.insert(qubits.end(), layout.clones.begin(), layout.clones.end());
    tc::sim::RngStream rng(cfg.seed, 0);
    const auto cal = tc::harness::calibrate(layout.n_qubits, qubits, cfg.shots, cfg.noise, rng);
    const auto text = tc::harness::calibration_json(cal, qubits, cfg);
    tc::harness::write_text_file(out_path(o, "calibration.json"), text);
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Telecloning circuit simulator and experiment harness"};
    app.require_subcommand(1);

    CommonOptions sweep_opts, post_opts, cal_opts;
    auto* sweep = app.add_subcommand("sweep", "fidelity sweep over the message grid");
    add_experiment_flags(sweep, sweep_opts, true);

    auto* post = app.add_subcommand("postselect", "post-selection proportions and fidelities (2-clone circuits)");
    post_opts.grid = "17";
    add_experiment_flags(post, post_opts, false);

    std::string cost_conn = "all", cost_out;
    auto* cost = app.add_subcommand("cost", "CNOT cost table, formula and emitted");
    cost->add_option("--connectivity", cost_conn, "lnn | full | all")->capture_default_str();
    cost->add_option("--out", cost_out, "output directory");

    ExportOptions ex;
    auto* exp = app.add_subcommand("export-circuit", "print or write a circuit in text form");
    exp->add_option("--circuit", ex.circuit)->capture_default_str();
    exp->add_option("--mode", ex.mode)->capture_default_str();
    exp->add_option("--connectivity", ex.connectivity)->capture_default_str();
    exp->add_option("--variant", ex.variant, "post-selection variant, port bit first")->capture_default_str();
    exp->add_option("--theta-y", ex.theta_y)->capture_default_str();
    exp->add_option("--theta-z", ex.theta_z)->capture_default_str();
    exp->add_option("--basis", ex.basis, "x | y | z | none")->capture_default_str();
    exp->add_option("--dialect", ex.dialect, "qasm | annotated")->capture_default_str();
    exp->add_option("--out", ex.out, "output file (default stdout)");

    auto* cal = app.add_subcommand("calibrate", "readout calibration matrix for a circuit's measured qubits");
    cal_opts.shots = 30000;
    add_experiment_flags(cal, cal_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigExit;
    }

    try {
        if (*sweep) run_sweep_cmd(sweep_opts);
        else if (*post) run_postselect_cmd(post_opts);
        else if (*cost) run_cost_cmd(cost_conn, cost_out);
        else if (*exp) run_export_cmd(ex);
        else if (*cal) run_calibrate_cmd(cal_opts);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigExit;
    } catch (const tc::harness::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoExit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigExit;
    }
    return 0;
}
