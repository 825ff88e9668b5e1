#include "telecloning/harness/sweep.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "telecloning/circuits/builder.hpp"
#include "telecloning/circuits/executor.hpp"
#include "telecloning/harness/analysis.hpp"
#include "telecloning/tomo/fidelity.hpp"

namespace telecloning::harness {

using circuits::Mode;
using circuits::TomoBasis;

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

tomo::CalibrationMatrix calibrate(std::size_t n_qubits, const std::vector<std::size_t>& qubits,
                                  std::uint64_t shots, const sim::NoiseModel& noise, sim::RngStream& rng) {
    const std::size_t m = qubits.size();
    std::map<std::string, sim::Histogram> preps;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << m); ++j) {
        circuits::Circuit c(n_qubits, m);
        for (std::size_t b = 0; b < m; ++b) {
            if ((j >> b) & 1U) c.add(sim::GateOp::x(qubits[b]));
        }
        for (std::size_t b = 0; b < m; ++b) c.measure(qubits[b], b);
        preps.emplace(sim::bits_from_index(j, m), circuits::sample_circuit(c, shots, noise, rng));
    }
    return tomo::build_calibration(preps);
}

namespace {

constexpr std::array<TomoBasis, 3> kBases{TomoBasis::X, TomoBasis::Y, TomoBasis::Z};

struct Context {
    const ExperimentConfig& config;
    circuits::TelecloningSpec spec;
    circuits::Layout layout;
    std::vector<double> theta_y, theta_z;
    std::optional<tomo::CalibrationMatrix> calibration;
};

// Adds clone marginals of a distribution over `first + m` low bits, clone k
// at bit first + k, for entries accepted by `keep`.
template <class Keep>
void add_marginals(tomo::BasisCounts& counts, std::size_t basis, const std::vector<double>& dist, std::size_t first,
                   Keep keep) {
    for (std::uint64_t idx = 0; idx < dist.size(); ++idx) {
        if (dist[idx] == 0.0 || !keep(idx)) continue;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            auto& bc = counts[k][basis];
            ((idx >> (first + k)) & 1U ? bc.ones : bc.zeros) += dist[idx];
        }
    }
}

tomo::BasisCounts sampled_counts(const Context& ctx, const circuits::MessageSpec& msg, sim::RngStream& rng) {
    const auto& cfg = ctx.config;
    const std::size_t m = ctx.layout.clones.size();
    tomo::BasisCounts counts(m);
    for (std::size_t b = 0; b < kBases.size(); ++b) {
        if (ctx.spec.mode == Mode::PostSelect) {
            for (unsigned v = 0; v < 4; ++v) {
                auto s = ctx.spec;
                s.variant = v;
                const auto h = circuits::sample_circuit(circuits::build_full_circuit(s, msg, kBases[b]), cfg.shots,
                                                        cfg.noise, rng);
                std::vector<double> dist(h.counts.begin(), h.counts.end());
                if (ctx.calibration) dist = tomo::mitigate(dist, *ctx.calibration);
                add_marginals(counts, b, dist, 2, [v](std::uint64_t idx) { return (idx & 3U) == v; });
            }
        } else {
            const auto h = circuits::sample_circuit(circuits::build_full_circuit(ctx.spec, msg, kBases[b]), cfg.shots,
                                                    cfg.noise, rng);
            std::vector<double> clones(std::size_t{1} << m, 0.0);
            for (std::uint64_t idx = 0; idx < h.counts.size(); ++idx) clones[idx >> 2] += static_cast<double>(h.counts[idx]);
            if (ctx.calibration) clones = tomo::mitigate(clones, *ctx.calibration);
            add_marginals(counts, b, clones, 0, [](std::uint64_t) { return true; });
        }
    }
    return counts;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config) {
    config.validate();
    Context ctx{config, config.spec(), {}, config.grid.theta_y_values(), config.grid.theta_z_values(), std::nullopt};
    ctx.layout = circuits::layout_for(ctx.spec);
    const std::size_t n_points = ctx.theta_y.size() * ctx.theta_z.size();
    const auto m = static_cast<std::size_t>(ctx.spec.m_clones);

    if (config.mitigation_active()) {
        // Post-selection filters on the Bell bits, so those are calibrated too.
        std::vector<std::size_t> measured;
        if (ctx.spec.mode == Mode::PostSelect) measured = {ctx.layout.message, ctx.layout.port};
        measured.insert(measured.end(), ctx.layout.clones.begin(), ctx.layout.clones.end());
        sim::RngStream rng(config.seed, n_points);
        ctx.calibration = calibrate(ctx.layout.n_qubits, measured, config.shots, config.noise, rng);
    }

    std::vector<SweepRecord> records(n_points * m);
    parallel_for(n_points, config.threads, [&](std::size_t point) {
        const double ty = ctx.theta_y[point / ctx.theta_z.size()];
        const double tz = ctx.theta_z[point % ctx.theta_z.size()];
        const circuits::MessageSpec msg{ty, tz};
        std::vector<double> fid(m);
        if (config.shots == 0) {
            const auto rho = exact_clone_densities(ctx.spec, msg, config.noise);
            for (std::size_t k = 0; k < m; ++k) fid[k] = tomo::fidelity_pure(msg, rho[k]);
        } else {
            sim::RngStream rng(config.seed, point);
            const auto counts = sampled_counts(ctx, msg, rng);
            for (std::size_t k = 0; k < m; ++k) {
                fid[k] = tomo::fidelity_pure(msg, tomo::mle_fit(tomo::pauli_expectations(counts, k)));
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            records[point * m + k] = SweepRecord{config.circuit, config.mode, config.connectivity, ty, tz, k,
                                                 config.shots, config.mitigation_active(), fid[k], config.seed};
        }
    });
    return records;
}

}  // namespace telecloning::harness
