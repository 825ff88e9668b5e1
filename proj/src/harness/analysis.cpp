#include "telecloning/harness/analysis.hpp"

#include <stdexcept>

#include "telecloning/circuits/builder.hpp"
#include "telecloning/circuits/executor.hpp"
#include "telecloning/sim/evolve.hpp"

namespace telecloning::harness {

using circuits::Mode;

namespace {

template <class State>
CloneDensities clones_of(const State& state, const std::vector<std::size_t>& clones) {
    CloneDensities out;
    for (auto q : clones) out.push_back(sim::reduce(state, {q}) / state.norm_squared());
    return out;
}

// Outcome-resolved clone states of one circuit, keyed by the two Bell clbits.
std::vector<OutcomeClones> branches_of(const circuits::TelecloningSpec& spec, const circuits::MessageSpec& msg,
                                       const sim::NoiseModel& noise) {
    const auto c = circuits::build_full_circuit(spec, msg, circuits::TomoBasis::None);
    const auto clones = c.qubits_with_role(circuits::QubitRole::Clone);
    std::vector<OutcomeClones> acc(4);
    for (unsigned v = 0; v < 4; ++v) {
        acc[v].variant = v;
        acc[v].clones.assign(clones.size(), Eigen::Matrix2cd::Zero());
    }
    auto add = [&](double p, std::uint64_t clbits, const CloneDensities& rho) {
        auto& slot = acc[clbits & 3U];
        slot.probability += p;
        for (std::size_t k = 0; k < rho.size(); ++k) slot.clones[k] += p * rho[k];
    };
    if (noise.has_depolarizing()) {
        for (const auto& b : circuits::run_branches_mixed(c, noise)) add(b.probability, b.clbits, clones_of(b.state, clones));
    } else {
        for (const auto& b : circuits::run_branches_pure(c, noise)) add(b.probability, b.clbits, clones_of(b.state, clones));
    }
    for (auto& o : acc) {
        if (o.probability > 0.0) {
            for (auto& r : o.clones) r /= o.probability;
        }
    }
    return acc;
}

}  // namespace

std::vector<OutcomeClones> exact_outcome_clones(const circuits::TelecloningSpec& spec,
                                                const circuits::MessageSpec& msg, const sim::NoiseModel& noise) {
    if (spec.mode != Mode::PostSelect) return branches_of(spec, msg, noise);
    std::vector<OutcomeClones> out;
    for (unsigned v = 0; v < 4; ++v) {
        auto s = spec;
        s.variant = v;
        out.push_back(branches_of(s, msg, noise)[v]);
    }
    return out;
}

CloneDensities exact_clone_densities(const circuits::TelecloningSpec& spec, const circuits::MessageSpec& msg,
                                     const sim::NoiseModel& noise) {
    const auto outcomes = exact_outcome_clones(spec, msg, noise);
    CloneDensities total(static_cast<std::size_t>(spec.m_clones), Eigen::Matrix2cd::Zero());
    for (const auto& o : outcomes) {
        if (o.probability <= 0.0) continue;
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += o.probability * o.clones[k];
    }
    return total;
}

}  // namespace telecloning::harness
