#include "telecloning/harness/postselect.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "telecloning/circuits/builder.hpp"
#include "telecloning/circuits/executor.hpp"
#include "telecloning/harness/analysis.hpp"
#include "telecloning/harness/sweep.hpp"
#include "telecloning/tomo/fidelity.hpp"
#include "telecloning/tomo/tomography.hpp"

namespace telecloning::harness {

using circuits::TomoBasis;

namespace {

constexpr std::array<TomoBasis, 3> kBases{TomoBasis::X, TomoBasis::Y, TomoBasis::Z};

std::vector<PostselectRecord> exact_point(const circuits::TelecloningSpec& spec, const circuits::MessageSpec& msg,
                                          const sim::NoiseModel& noise) {
    std::vector<PostselectRecord> out;
    for (const auto& o : exact_outcome_clones(spec, msg, noise)) {
        PostselectRecord r{msg.theta_y, msg.theta_z, o.variant, o.probability, {}, 0, 0};
        for (const auto& rho : o.clones) {
            r.clone_fidelities.push_back(o.probability > 0.0 ? tomo::fidelity_pure(msg, rho)
                                                             : std::numeric_limits<double>::quiet_NaN());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PostselectRecord> sampled_point(const ExperimentConfig& config, const circuits::TelecloningSpec& spec,
                                            const circuits::MessageSpec& msg, sim::RngStream& rng) {
    const auto m = static_cast<std::size_t>(spec.m_clones);
    std::array<tomo::BasisCounts, 4> counts;
    counts.fill(tomo::BasisCounts(m));
    std::array<std::uint64_t, 4> kept{};
    for (std::size_t b = 0; b < kBases.size(); ++b) {
        // Register distribution where each Bell outcome comes from its own
        // variant circuit; the outcome marginals agree across variants because
        // the corrections act after the Bell measurement.
        std::vector<double> pooled;
        for (unsigned v = 0; v < 4; ++v) {
            auto s = spec;
            s.variant = v;
            const auto dist = circuits::outcome_distribution(circuits::build_full_circuit(s, msg, kBases[b]), config.noise);
            if (pooled.empty()) pooled.assign(dist.size(), 0.0);
            for (std::uint64_t idx = 0; idx < dist.size(); ++idx) {
                if ((idx & 3U) == v) pooled[idx] = dist[idx];
            }
        }
        const auto cdf = sim::cumulative(pooled);
        std::vector<std::uint64_t> hist(pooled.size(), 0);
        for (std::uint64_t s = 0; s < config.shots; ++s) ++hist[rng.categorical(cdf)];
        for (std::uint64_t idx = 0; idx < hist.size(); ++idx) {
            if (hist[idx] == 0) continue;
            const auto v = static_cast<unsigned>(idx & 3U);
            kept[v] += hist[idx];
            for (std::size_t k = 0; k < m; ++k) {
                auto& bc = counts[v][k][b];
                ((idx >> (2 + k)) & 1U ? bc.ones : bc.zeros) += static_cast<double>(hist[idx]);
            }
        }
    }
    std::vector<PostselectRecord> out;
    const double pool = 3.0 * static_cast<double>(config.shots);
    for (unsigned v = 0; v < 4; ++v) {
        PostselectRecord r{msg.theta_y, msg.theta_z, v, static_cast<double>(kept[v]) / pool, {}, config.shots, config.seed};
        for (std::size_t k = 0; k < m; ++k) {
            const auto& cc = counts[v][k];
            const bool empty = cc[0].total() <= 0.0 || cc[1].total() <= 0.0 || cc[2].total() <= 0.0;
            r.clone_fidelities.push_back(empty ? std::numeric_limits<double>::quiet_NaN()
                                               : tomo::fidelity_pure(msg, tomo::mle_fit(tomo::pauli_expectations(cc))));
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<PostselectRecord> postselect_analysis(const ExperimentConfig& config) {
    auto cfg = config;
    cfg.mode = circuits::Mode::PostSelect;
    cfg.validate();
    const auto spec = cfg.spec();
    if (spec.m_clones != 2) throw ConfigError("post-selection analysis is defined for the 2-clone circuits (pcc, apcc)");
    const double tz = cfg.grid.fixed_theta_z.value_or(std::numbers::pi / 2);
    const auto thetas = linspace(0.0, std::numbers::pi, cfg.grid.n_theta_y);

    std::vector<std::vector<PostselectRecord>> per_point(thetas.size());
    parallel_for(thetas.size(), cfg.threads, [&](std::size_t i) {
        const circuits::MessageSpec msg{thetas[i], tz};
        if (cfg.shots == 0) {
            per_point[i] = exact_point(spec, msg, cfg.noise);
        } else {
            sim::RngStream rng(cfg.seed, i);
            per_point[i] = sampled_point(cfg, spec, msg, rng);
        }
    });
    std::vector<PostselectRecord> out;
    for (auto& p : per_point) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace telecloning::harness
