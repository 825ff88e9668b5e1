// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance [path/to/telecloning-cli [work-dir]]  (criterion 9 needs the CLI)

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "telecloning/circuits/builder.hpp"
#include "telecloning/circuits/cost.hpp"
#include "telecloning/circuits/decompose.hpp"
#include "telecloning/circuits/dicke.hpp"
#include "telecloning/harness/analysis.hpp"
#include "telecloning/harness/config.hpp"
#include "telecloning/harness/output.hpp"
#include "telecloning/harness/postselect.hpp"
#include "telecloning/harness/summary.hpp"
#include "telecloning/harness/sweep.hpp"
#include "telecloning/sim/evolve.hpp"
#include "telecloning/tomo/fidelity.hpp"

namespace tc = telecloning;
using tc::circuits::Connectivity;
using tc::circuits::Mode;
using tc::harness::ExperimentConfig;
using tc::harness::Grid;

namespace {

constexpr double kPi = std::numbers::pi;
const char* const kCircuits[] = {"pcc", "apcc", "pccc", "aapccc"};
constexpr Mode kModes[] = {Mode::FeedForward, Mode::Deferred, Mode::PostSelect};
constexpr Connectivity kConns[] = {Connectivity::Full, Connectivity::LNN};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

ExperimentConfig config(const std::string& circuit, Mode mode, Connectivity conn, Grid grid, std::uint64_t shots = 0) {
    ExperimentConfig c;
    c.circuit = circuit;
    c.mode = mode;
    c.connectivity = conn;
    c.grid = grid;
    c.shots = shots;
    c.seed = 2024;
    return c;
}

double mean_fidelity(const std::vector<tc::harness::SweepRecord>& recs) {
    std::vector<double> f;
    for (const auto& r : recs) f.push_back(r.fidelity);
    return tc::harness::mean_sd(f).mean;
}

double limit_for(const std::string& circuit) {
    return tc::tomo::optimal_fidelity(1, tc::circuits::parse_circuit_id(circuit).m_clones);
}

void c1_optimal_fidelity(Outcome& o) {
    double worst = 0.0;
    std::size_t n = 0;
    for (const char* id : kCircuits) {
        const double limit = limit_for(id);
        for (auto mode : kModes) {
            for (auto conn : kConns) {
                for (const auto& r : tc::harness::run_sweep(config(id, mode, conn, Grid{17, 17, {}}))) {
                    worst = std::max(worst, std::abs(r.fidelity - limit));
                    ++n;
                }
            }
        }
    }
    o.pass = worst <= 1e-9;
    o.detail << n << " clone fidelities, max |F - limit| = " << worst;
}

void c2_dicke(Outcome& o) {
    double worst = 0.0;
    for (auto conn : kConns) {
        for (int m = 1; m <= 6; ++m) {
            const auto lowered = tc::circuits::lower(tc::circuits::build_dicke_unitary(m, conn));
            for (int i = 0; i <= m; ++i) {
                auto s = tc::sim::PureState::basis(static_cast<std::size_t>(m), (1ULL << i) - 1);
                for (const auto& op : lowered.ops()) {
                    if (const auto* g = std::get_if<tc::sim::GateOp>(&op)) tc::sim::apply_gate(s, *g);
                }
                // oracle: uniform over weight-i strings, by enumeration
                Eigen::VectorXcd d = Eigen::VectorXcd::Zero(Eigen::Index{1} << m);
                for (Eigen::Index x = 0; x < d.size(); ++x) d(x) = std::popcount(static_cast<unsigned>(x)) == i ? 1.0 : 0.0;
                d.normalize();
                const auto phase = d.dot(s.amplitudes());  // <d|s>
                worst = std::max(worst, (s.amplitudes() - phase * d).norm());
            }
        }
    }
    o.pass = worst <= 1e-12;
    o.detail << "M = 1..6, both connectivities, max residual " << worst;
}

void c3_cost(Outcome& o) {
    std::size_t headline = 0;
    for (const auto& row : tc::harness::cost_table(Connectivity::LNN)) {
        if (row.circuit == "aapccc" && row.mode == Mode::Deferred) headline = row.audit.formula.total;
    }
    std::size_t mismatches = 0, checked = 0;
    for (auto conn : kConns) {
        for (const auto& row : tc::harness::cost_table(conn)) {
            const auto s = tc::circuits::parse_circuit_id(row.circuit);
            const double m = s.m_clones;
            const bool lnn = conn == Connectivity::LNN;
            const double prep = s.with_ancilla ? (lnn ? 2 * m * m - m : 2 * m - 1) : (m == 2 ? 1 : (lnn ? 3 : 2));
            const double dicke = (s.with_ancilla ? 2 : 1) * (2.5 * m * m - 5.5 * m + 3);
            const double deferred = row.mode == Mode::Deferred ? (lnn ? 4 * m - 1 : 2 * m) : 0;
            ++checked;
            if (static_cast<double>(row.audit.formula.total) != prep + dicke + 1 + deferred) ++mismatches;
        }
    }
    o.pass = headline == 45 && mismatches == 0;
    o.detail << "AAPCCC LNN deferred = " << headline << ", " << checked - mismatches << "/" << checked
             << " totals match the summation";
}

void c4_postselect(Outcome& o) {
    auto p0 = [](double t) { return (2 * std::pow(std::cos(t / 2), 2) + std::pow(std::sin(t / 2), 2)) / 6; };
    auto p1 = [](double t) { return (std::pow(std::cos(t / 2), 2) + 2 * std::pow(std::sin(t / 2), 2)) / 6; };
    auto f0 = [&](double t) { return (4 * std::pow(std::cos(t / 2), 2) + std::pow(std::sin(t / 2), 2)) / (12 * p0(t)); };
    auto f1 = [&](double t) { return (std::pow(std::cos(t / 2), 2) + 4 * std::pow(std::sin(t / 2), 2)) / (12 * p1(t)); };
    const Grid grid{17, 1, kPi / 2};

    double exact_err = 0.0;
    for (const auto& r : tc::harness::postselect_analysis(config("pcc", Mode::PostSelect, Connectivity::Full, grid))) {
        const bool port = (r.variant >> 1) & 1U;
        exact_err = std::max(exact_err, std::abs(r.kept_proportion - (port ? p1(r.theta_y) : p0(r.theta_y))));
        for (double f : r.clone_fidelities) {
            exact_err = std::max(exact_err, std::abs(f - (port ? f1(r.theta_y) : f0(r.theta_y))));
        }
    }
    const bool anchors = std::abs(p0(0) - 1.0 / 3) < 1e-12 && std::abs(f1(0) - 0.5) < 1e-12 &&
                         std::abs(p0(kPi / 2) - p1(kPi / 2)) < 1e-12;
    double apcc_err = 0.0;
    for (const auto& r : tc::harness::postselect_analysis(config("apcc", Mode::PostSelect, Connectivity::Full, grid))) {
        apcc_err = std::max(apcc_err, std::abs(r.kept_proportion - 0.25));
    }
    double sampled_err = 0.0;
    for (const auto& r :
         tc::harness::postselect_analysis(config("pcc", Mode::PostSelect, Connectivity::Full, grid, 30000))) {
        const bool port = (r.variant >> 1) & 1U;
        sampled_err = std::max(sampled_err, std::abs(r.kept_proportion - (port ? p1(r.theta_y) : p0(r.theta_y))));
        for (double f : r.clone_fidelities) {
            sampled_err = std::max(sampled_err, std::abs(f - (port ? f1(r.theta_y) : f0(r.theta_y))));
        }
    }
    o.pass = exact_err <= 1e-9 && anchors && apcc_err <= 1e-9 && sampled_err <= 0.02;
    o.detail << "PCC exact max err " << exact_err << ", APCC max |p - 1/4| " << apcc_err << ", sampled max err "
             << sampled_err;
}

void c5_sampled(Outcome& o) {
    for (const char* id : kCircuits) {
        const auto recs = tc::harness::run_sweep(config(id, Mode::FeedForward, Connectivity::Full, Grid{17, 17, {}}, 30000));
        std::vector<double> f;
        for (const auto& r : recs) f.push_back(r.fidelity);
        const auto ms = tc::harness::mean_sd(f);
        const double dev = std::abs(ms.mean - limit_for(id));
        o.pass = o.pass && dev <= 0.01 && ms.sd < 0.02;
        o.detail << id << " mean " << ms.mean << " sd " << ms.sd << "; ";
    }
}

void c6_mitigation(Outcome& o) {
    tc::sim::NoiseModel readout;
    readout.readout = {tc::sim::symmetric_flip(0.03)};
    for (const auto& [id, mode] : {std::pair{"pcc", Mode::Deferred}, {"pccc", Mode::Deferred}, {"pcc", Mode::PostSelect}}) {
        auto base = config(id, mode, Connectivity::Full, Grid{9, 9, {}}, 30000);
        const double clean = mean_fidelity(tc::harness::run_sweep(base));
        base.noise = readout;
        const double raw = mean_fidelity(tc::harness::run_sweep(base));
        base.mitigate = true;
        const double fixed = mean_fidelity(tc::harness::run_sweep(base));
        o.pass = o.pass && clean - raw >= 0.015 && std::abs(fixed - clean) <= 0.01;
        o.detail << id << "/" << tc::circuits::mode_name(mode) << " clean " << clean << " raw " << raw << " mitigated "
                 << fixed << "; ";
    }
}

void c7_mode_equivalence(Outcome& o) {
    double worst = 0.0;
    const Grid grid{17, 17, {}};
    for (const char* id : {"pcc", "apcc", "pccc", "aapccc", "ancilla:4"}) {
        for (auto conn : kConns) {
            auto spec = tc::circuits::parse_circuit_id(id);
            spec.connectivity = conn;
            for (double ty : grid.theta_y_values()) {
                for (double tz : grid.theta_z_values()) {
                    const tc::circuits::MessageSpec msg{ty, tz};
                    spec.mode = Mode::FeedForward;
                    const auto ff = tc::harness::exact_clone_densities(spec, msg);
                    spec.mode = Mode::Deferred;
                    const auto df = tc::harness::exact_clone_densities(spec, msg);
                    spec.mode = Mode::PostSelect;
                    const auto ps = tc::harness::exact_clone_densities(spec, msg);
                    for (std::size_t k = 0; k < ff.size(); ++k) {
                        worst = std::max(worst, (ff[k] - df[k]).cwiseAbs().maxCoeff());
                        worst = std::max(worst, (ff[k] - ps[k]).cwiseAbs().maxCoeff());
                    }
                }
            }
        }
    }
    o.pass = worst <= 1e-9;
    o.detail << "5 circuits x 2 connectivities x 289 points, max entry difference " << worst;
}

void c8_noise_ordering(Outcome& o) {
    std::vector<std::pair<std::size_t, std::string>> by_cost;
    for (const char* id : kCircuits) {
        auto s = tc::circuits::parse_circuit_id(id);
        s.mode = Mode::Deferred;
        by_cost.emplace_back(tc::circuits::cnot_cost(s, Connectivity::LNN).total, id);
    }
    std::sort(by_cost.begin(), by_cost.end());
    o.pass = by_cost.front().second == "pcc" && by_cost.back().second == "aapccc";

    const std::vector<double> levels{0.0, 0.005, 0.01, 0.02};
    std::map<std::string, std::vector<double>> fid;
    for (const auto& [cost, id] : by_cost) {
        for (double p2 : levels) {
            auto cfg = config(id, Mode::Deferred, Connectivity::LNN, Grid{5, 5, {}});
            cfg.noise.p2 = p2;
            fid[id].push_back(mean_fidelity(tc::harness::run_sweep(cfg)));
        }
        // monotone non-increasing in p2
        for (std::size_t i = 1; i < levels.size(); ++i) o.pass = o.pass && fid[id][i] <= fid[id][i - 1] + 1e-12;
        o.detail << id << "(" << cost << " CNOTs)";
        for (std::size_t i = 1; i < levels.size(); ++i) o.detail << " " << fid[id][i];
        o.detail << "; ";
    }
    // cheapest circuit best, most expensive worst, at every noise level
    for (std::size_t i = 1; i < levels.size(); ++i) {
        for (const auto& [cost, id] : by_cost) {
            o.pass = o.pass && fid["pcc"][i] >= fid[id][i] && fid["aapccc"][i] <= fid[id][i];
        }
    }
}

bool run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
}

void c9_determinism(Outcome& o, const std::string& cli, const std::filesystem::path& work) {
    namespace fs = std::filesystem;
    if (cli.empty()) {
        o.pass = false;
        o.detail << "CLI path not given";
        return;
    }
    const std::vector<std::pair<std::string, std::vector<std::string>>> runs{
        {"sweep --circuit pcc --grid 3x3 --shots 2000 --seed 7 --threads 2", {"sweep.csv", "summary.csv"}},
        {"sweep --circuit apcc --mode postselect --grid 2x2 --shots 1000 --seed 7 --format json", {"sweep.json"}},
        {"postselect --circuit pcc --grid 5 --shots 1000 --seed 9", {"postselect.csv"}},
        {"cost --connectivity all", {"cost.csv"}},
        {"calibrate --circuit pcc --mode deferred --shots 500 --seed 3", {"calibration.json"}},
    };
    std::size_t compared = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const fs::path a = work / ("run" + std::to_string(i) + "a"), b = work / ("run" + std::to_string(i) + "b");
        fs::remove_all(a);
        fs::remove_all(b);
        const bool ok = run_cli(cli, runs[i].first + " --out " + a.string()) &&
                        run_cli(cli, runs[i].first + " --out " + b.string());
        if (!ok) {
            o.pass = false;
            o.detail << "command failed: " << runs[i].first << "; ";
            continue;
        }
        for (const auto& f : runs[i].second) {
            const auto x = tc::harness::read_text_file((a / f).string());
            const auto y = tc::harness::read_text_file((b / f).string());
            o.pass = o.pass && !x.empty() && x == y;
            ++compared;
        }
    }
    o.detail << compared << " output files compared byte for byte";
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::filesystem::path work =
        argc > 2 ? std::filesystem::path(argv[2]) : std::filesystem::temp_directory_path() / "telecloning_acceptance";

    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"1 optimal fidelity (exact, 17x17, all circuits/modes)", c1_optimal_fidelity},
        {"2 Dicke unitary oracle", c2_dicke},
        {"3 CNOT cost worked example and summation", c3_cost},
        {"4 post-selection statistics", c4_postselect},
        {"5 shot-sampled convergence", c5_sampled},
        {"6 mitigation recovery", c6_mitigation},
        {"7 mode equivalence", c7_mode_equivalence},
        {"8 depolarizing ordering and monotonicity", c8_noise_ordering},
        {"9 CLI determinism", [&](Outcome& o) { c9_determinism(o, cli, work); }},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %s  [%.1fs]  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
