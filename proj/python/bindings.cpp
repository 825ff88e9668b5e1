#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "telecloning/circuits/builder.hpp"
#include "telecloning/circuits/cost.hpp"
#include "telecloning/circuits/dicke.hpp"
#include "telecloning/circuits/text_io.hpp"
#include "telecloning/harness/analysis.hpp"
#include "telecloning/harness/config.hpp"
#include "telecloning/harness/postselect.hpp"
#include "telecloning/harness/summary.hpp"
#include "telecloning/harness/sweep.hpp"
#include "telecloning/tomo/fidelity.hpp"
#include "telecloning/tomo/mitigation.hpp"
#include "telecloning/tomo/tomography.hpp"

namespace py = pybind11;
namespace tc = telecloning;
using namespace py::literals;

namespace {

tc::circuits::TelecloningSpec make_spec(const std::string& circuit, const std::string& mode,
                                        const std::string& connectivity, const std::string& variant) {
    auto s = tc::circuits::parse_circuit_id(circuit);
    s.mode = tc::circuits::parse_mode(mode);
    s.connectivity = tc::circuits::parse_connectivity(connectivity);
    s.variant = tc::circuits::parse_variant(variant);
    s.validate();
    return s;
}

tc::harness::ExperimentConfig make_config(const std::string& circuit, const std::string& mode,
                                          const std::string& connectivity, const std::string& grid,
                                          std::optional<double> theta_z, std::uint64_t shots, py::object noise,
                                          bool mitigate, std::uint64_t seed, unsigned threads) {
    tc::harness::ExperimentConfig c;
    c.circuit = circuit;
    c.mode = tc::circuits::parse_mode(mode);
    c.connectivity = tc::circuits::parse_connectivity(connectivity);
    c.grid = tc::harness::parse_grid(grid);
    c.grid.fixed_theta_z = theta_z;
    c.shots = shots;
    if (!noise.is_none()) {
        c.noise = tc::harness::parse_noise_json(py::module_::import("json").attr("dumps")(noise).cast<std::string>());
        c.noise_source = "python";
    }
    c.mitigate = mitigate;
    c.seed = seed;
    c.threads = threads;
    c.validate();
    return c;
}

py::dict cost_dict(const tc::circuits::CostReport& r) {
    return py::dict("prep"_a = r.prep_cnots, "dicke"_a = r.dicke_cnots, "bell"_a = r.bell_cnots,
                    "deferred"_a = r.deferred_cnots, "total"_a = r.total);
}

tc::circuits::TomoBasis parse_basis(const std::string& b) {
    if (b == "x") return tc::circuits::TomoBasis::X;
    if (b == "y") return tc::circuits::TomoBasis::Y;
    if (b == "z") return tc::circuits::TomoBasis::Z;
    if (b == "none") return tc::circuits::TomoBasis::None;
    throw std::invalid_argument("basis must be x, y, z or none");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Telecloning circuit simulator: circuits, exact and sampled analysis, tomography.";
    m.attr("__version__") = TELECLONING_VERSION;

    py::register_exception<tc::harness::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<tc::harness::IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<tc::circuits::CircuitTextError>(m, "CircuitTextError", PyExc_ValueError);

    m.def("optimal_fidelity", &tc::tomo::optimal_fidelity, "n"_a, "m"_a);
    m.def(
        "dicke_state", [](int m, int i) { return tc::circuits::dicke_state(m, i).amplitudes(); }, "m"_a, "i"_a,
        "Amplitudes of D(M, i), little-endian.");
    m.def("dicke_cnot_formula", &tc::circuits::dicke_cnot_formula, "m"_a);

    m.def(
        "cnot_cost",
        [](const std::string& circuit, const std::string& mode, const std::string& connectivity) {
            return cost_dict(tc::circuits::cnot_cost(make_spec(circuit, mode, connectivity, "00")));
        },
        "circuit"_a, "mode"_a = "feedforward", "connectivity"_a = "full");
    m.def(
        "audit_cost",
        [](const std::string& circuit, const std::string& mode, const std::string& connectivity) {
            const auto a = tc::circuits::audit_cost(make_spec(circuit, mode, connectivity, "00"));
            return py::dict("formula"_a = cost_dict(a.formula), "emitted"_a = cost_dict(a.emitted),
                            "routing_cnots"_a = a.routing_cnots);
        },
        "circuit"_a, "mode"_a = "feedforward", "connectivity"_a = "full");

    m.def(
        "export_circuit",
        [](const std::string& circuit, const std::string& mode, const std::string& connectivity,
           const std::string& variant, double theta_y, double theta_z, const std::string& basis,
           const std::string& dialect) {
            const auto c = tc::circuits::build_full_circuit(make_spec(circuit, mode, connectivity, variant),
                                                            {theta_y, theta_z}, parse_basis(basis));
            return tc::circuits::export_circuit_text(c, tc::circuits::parse_dialect(dialect));
        },
        "circuit"_a, "mode"_a = "feedforward", "connectivity"_a = "full", "variant"_a = "00", "theta_y"_a = 0.0,
        "theta_z"_a = 0.0, "basis"_a = "z", "dialect"_a = "annotated");
    m.def(
        "roundtrip_circuit_text",
        [](const std::string& text, const std::string& dialect) {
            return tc::circuits::export_circuit_text(tc::circuits::parse_circuit_text(text),
                                                     tc::circuits::parse_dialect(dialect));
        },
        "text"_a, "dialect"_a = "annotated");

    m.def(
        "clone_densities",
        [](const std::string& circuit, const std::string& mode, const std::string& connectivity, double theta_y,
           double theta_z) {
            return tc::harness::exact_clone_densities(make_spec(circuit, mode, connectivity, "00"), {theta_y, theta_z});
        },
        "circuit"_a, "mode"_a = "feedforward", "connectivity"_a = "full", "theta_y"_a = 0.0, "theta_z"_a = 0.0,
        "Exact reduced density matrix of every clone.");

    m.def(
        "sweep",
        [](const std::string& circuit, const std::string& mode, const std::string& connectivity,
           const std::string& grid, std::optional<double> theta_z, std::uint64_t shots, py::object noise,
           bool mitigate, std::uint64_t seed, unsigned threads) {
            const auto cfg =
                make_config(circuit, mode, connectivity, grid, theta_z, shots, noise, mitigate, seed, threads);
            std::vector<tc::harness::SweepRecord> recs;
            {
                py::gil_scoped_release release;
                recs = tc::harness::run_sweep(cfg);
            }
            py::list out;
            for (const auto& r : recs) {
                out.append(py::dict("circuit"_a = r.circuit, "mode"_a = tc::circuits::mode_name(r.mode),
                                    "connectivity"_a = tc::circuits::connectivity_name(r.connectivity),
                                    "theta_y"_a = r.theta_y, "theta_z"_a = r.theta_z, "clone"_a = r.clone,
                                    "shots"_a = r.shots, "mitigated"_a = r.mitigated, "fidelity"_a = r.fidelity,
                                    "seed"_a = r.seed));
            }
            return out;
        },
        "circuit"_a = "pcc", "mode"_a = "feedforward", "connectivity"_a = "full", "grid"_a = "17x17",
        "theta_z"_a = py::none(), "shots"_a = 0, "noise"_a = py::none(), "mitigate"_a = false, "seed"_a = 1,
        "threads"_a = 1);

    m.def(
        "postselect",
        [](const std::string& circuit, const std::string& connectivity, int n_theta_y, double theta_z,
           std::uint64_t shots, py::object noise, std::uint64_t seed) {
            auto cfg = make_config(circuit, "postselect", connectivity, std::to_string(n_theta_y), theta_z, shots,
                                   noise, false, seed, 1);
            py::list out;
            for (const auto& r : tc::harness::postselect_analysis(cfg)) {
                out.append(py::dict("theta_y"_a = r.theta_y, "theta_z"_a = r.theta_z,
                                    "variant"_a = tc::circuits::variant_label(r.variant),
                                    "kept_proportion"_a = r.kept_proportion,
                                    "clone_fidelities"_a = r.clone_fidelities));
            }
            return out;
        },
        "circuit"_a = "pcc", "connectivity"_a = "full", "n_theta_y"_a = 17, "theta_z"_a = 1.5707963267948966,
        "shots"_a = 0, "noise"_a = py::none(), "seed"_a = 1);

    m.def(
        "mle_fit", [](double x, double y, double z) { return Eigen::Matrix2cd(tc::tomo::mle_fit({x, y, z})); },
        "x"_a, "y"_a, "z"_a);
    m.def(
        "fidelity_pure",
        [](double theta_y, double theta_z, const Eigen::Matrix2cd& rho) {
            return tc::tomo::fidelity_pure({theta_y, theta_z}, rho);
        },
        "theta_y"_a, "theta_z"_a, "rho"_a);
    m.def(
        "mitigate",
        [](const std::vector<double>& raw, const Eigen::MatrixXd& calibration) {
            const auto dim = static_cast<std::size_t>(calibration.rows());
            std::size_t bits = 0;
            while ((std::size_t{1} << bits) < dim) ++bits;
            if ((std::size_t{1} << bits) != dim || calibration.cols() != calibration.rows()) {
                throw std::invalid_argument("calibration must be a square 2^m matrix");
            }
            return tc::tomo::mitigate(raw, tc::tomo::CalibrationMatrix{bits, calibration});
        },
        "raw"_a, "calibration"_a, "Constrained least-squares readout correction; keeps the total.");
}
