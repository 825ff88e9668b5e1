#include "telecloning/circuits/executor.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <type_traits>

#include "telecloning/circuits/decompose.hpp"
#include "telecloning/sim/evolve.hpp"

namespace telecloning::circuits {

using sim::MixedState;
using sim::NoiseModel;
using sim::PureState;

namespace {

constexpr double kNegligible = 1e-16;

template <class State>
struct Work {
    std::uint64_t clbits = 0;
    State state;  // unnormalized; squared norm is the branch weight
};

template <class State>
void apply_noisy(State& s, const GateOp& g, const NoiseModel& noise) {
    sim::apply_gate(s, g);
    if constexpr (std::is_same_v<State, MixedState>) {
        if (g.arity() == 1 && noise.p1 > 0.0) {
            sim::apply_depolarizing(s, {g.target()}, noise.p1);
        } else if (g.arity() == 2 && noise.p2 > 0.0) {
            sim::apply_depolarizing(s, {g.controls()[0].qubit, g.target()}, noise.p2);
        } else if (g.arity() > 2 && noise.has_depolarizing()) {
            throw std::logic_error("noisy execution needs a lowered circuit");
        }
    }
}

template <class State>
void scale_weight(State& s, double p) {
    if constexpr (std::is_same_v<State, MixedState>) {
        s.scale(p);
    } else {
        s.scale(std::sqrt(p));
    }
}

// Ops that are measurements nothing later depends on; their results can be
// read off the final state instead of forking branches.
std::vector<bool> terminal_measures(const Circuit& circuit) {
    const auto& ops = circuit.ops();
    std::vector<bool> terminal(ops.size(), false);
    std::vector<bool> touched(circuit.n_qubits(), false);
    std::vector<bool> used(circuit.n_clbits(), false);
    for (std::size_t i = ops.size(); i-- > 0;) {
        if (const auto* m = std::get_if<Measure>(&ops[i])) {
            terminal[i] = !touched[m->qubit] && !used[m->clbit];
            touched[m->qubit] = true;
            used[m->clbit] = true;
            continue;
        }
        if (const auto* c = std::get_if<Conditional>(&ops[i])) used[c->clbit] = true;
        for (auto q : op_qubits(ops[i])) touched[q] = true;
    }
    return terminal;
}

template <class State>
std::vector<Work<State>> evolve(const Circuit& circuit, const NoiseModel& noise, const std::vector<bool>& skip) {
    std::vector<Work<State>> branches;
    branches.push_back({0, State(circuit.n_qubits())});
    const auto& ops = circuit.ops();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto& op = ops[i];
        if (const auto* g = std::get_if<GateOp>(&op)) {
            for (auto& b : branches) apply_noisy(b.state, *g, noise);
        } else if (const auto* s = std::get_if<Swap>(&op)) {
            const GateOp ab = GateOp::cnot(s->a, s->b), ba = GateOp::cnot(s->b, s->a);
            for (auto& b : branches) {
                apply_noisy(b.state, ab, noise);
                apply_noisy(b.state, ba, noise);
                apply_noisy(b.state, ab, noise);
            }
        } else if (const auto* c = std::get_if<Conditional>(&op)) {
            for (auto& b : branches) {
                if ((b.clbits >> c->clbit) & 1U) apply_noisy(b.state, c->gate, noise);
            }
        } else if (const auto* m = std::get_if<Measure>(&op)) {
            if (!skip.empty() && skip[i]) continue;
            const auto a = noise.readout_for(m->qubit);
            const std::uint64_t bit = std::uint64_t{1} << m->clbit;
            std::vector<Work<State>> next;
            for (const auto& b : branches) {
                for (std::uint64_t truth = 0; truth < 2; ++truth) {
                    State projected = b.state;
                    sim::project(projected, {m->qubit}, truth);
                    if (projected.norm_squared() <= kNegligible) continue;
                    for (std::uint64_t read = 0; read < 2; ++read) {
                        const double p = a(static_cast<int>(read), static_cast<int>(truth));
                        if (p <= 0.0) continue;
                        State s = projected;
                        if (p != 1.0) scale_weight(s, p);
                        next.push_back({read ? (b.clbits | bit) : (b.clbits & ~bit), std::move(s)});
                    }
                }
            }
            if constexpr (std::is_same_v<State, MixedState>) {
                // Later ops only see the register, so equal registers can be summed.
                std::map<std::uint64_t, std::size_t> slot;
                std::vector<Work<State>> merged;
                for (auto& w : next) {
                    auto [it, fresh] = slot.emplace(w.clbits, merged.size());
                    if (fresh) {
                        merged.push_back(std::move(w));
                    } else {
                        merged[it->second].state.matrix_mut() += w.state.matrix();
                    }
                }
                next = std::move(merged);
            }
            branches = std::move(next);
        }
    }
    return branches;
}

template <class State>
std::vector<RegisterBranch<State>> finish(std::vector<Work<State>> work) {
    std::vector<RegisterBranch<State>> out;
    for (auto& w : work) {
        const double p = w.state.norm_squared();
        if (p <= kNegligible) continue;
        w.state.normalize();
        out.push_back({p, w.clbits, std::move(w.state)});
    }
    return out;
}

void check_register(const Circuit& circuit) {
    if (circuit.n_clbits() > 24) throw std::invalid_argument("classical register too wide for a dense distribution");
}

template <class State>
void accumulate_distribution(const Circuit& circuit, const NoiseModel& noise, std::vector<double>& dist) {
    const auto skip = terminal_measures(circuit);
    std::vector<std::size_t> qubits, clbits;
    for (std::size_t i = 0; i < skip.size(); ++i) {
        if (!skip[i]) continue;
        const auto& m = std::get<Measure>(circuit.ops()[i]);
        qubits.push_back(m.qubit);
        clbits.push_back(m.clbit);
    }
    std::uint64_t clear = 0;
    for (auto c : clbits) clear |= std::uint64_t{1} << c;
    for (const auto& w : evolve<State>(circuit, noise, skip)) {
        if (qubits.empty()) {
            dist[w.clbits] += w.state.norm_squared();
            continue;
        }
        const auto probs = sim::apply_readout(sim::outcome_probabilities(w.state, qubits), qubits, noise);
        for (std::uint64_t k = 0; k < probs.size(); ++k) {
            if (probs[k] == 0.0) continue;
            std::uint64_t reg = w.clbits & ~clear;
            for (std::size_t j = 0; j < clbits.size(); ++j) {
                if ((k >> j) & 1U) reg |= std::uint64_t{1} << clbits[j];
            }
            dist[reg] += probs[k];
        }
    }
}

template <class State>
std::uint64_t trajectory(const Circuit& circuit, const NoiseModel& noise, sim::RngStream& rng) {
    State state(circuit.n_qubits());
    std::uint64_t reg = 0;
    for (const auto& op : circuit.ops()) {
        if (const auto* g = std::get_if<GateOp>(&op)) {
            apply_noisy(state, *g, noise);
        } else if (const auto* s = std::get_if<Swap>(&op)) {
            apply_noisy(state, GateOp::cnot(s->a, s->b), noise);
            apply_noisy(state, GateOp::cnot(s->b, s->a), noise);
            apply_noisy(state, GateOp::cnot(s->a, s->b), noise);
        } else if (const auto* c = std::get_if<Conditional>(&op)) {
            if ((reg >> c->clbit) & 1U) apply_noisy(state, c->gate, noise);
        } else if (const auto* m = std::get_if<Measure>(&op)) {
            const auto truth = sim::sample_measure(state, {m->qubit}, rng);
            const auto a = noise.readout_for(m->qubit);
            const bool read = rng.uniform() < a(1, static_cast<int>(truth));
            const std::uint64_t bit = std::uint64_t{1} << m->clbit;
            reg = read ? (reg | bit) : (reg & ~bit);
        }
    }
    return reg;
}

}  // namespace

std::vector<RegisterBranch<PureState>> run_branches_pure(const Circuit& circuit, const NoiseModel& noise) {
    noise.validate();
    if (noise.has_depolarizing()) throw std::invalid_argument("depolarizing noise needs mixed-state execution");
    return finish(evolve<PureState>(circuit, noise, {}));
}

std::vector<RegisterBranch<MixedState>> run_branches_mixed(const Circuit& circuit, const NoiseModel& noise) {
    noise.validate();
    if (noise.has_depolarizing()) return finish(evolve<MixedState>(lower(circuit), noise, {}));
    return finish(evolve<MixedState>(circuit, noise, {}));
}

std::vector<double> outcome_distribution(const Circuit& circuit, const NoiseModel& noise) {
    noise.validate();
    check_register(circuit);
    std::vector<double> dist(std::size_t{1} << circuit.n_clbits(), 0.0);
    if (noise.has_depolarizing()) {
        accumulate_distribution<MixedState>(lower(circuit), noise, dist);
    } else {
        accumulate_distribution<PureState>(circuit, noise, dist);
    }
    return dist;
}

sim::Histogram sample_circuit(const Circuit& circuit, std::uint64_t shots, const NoiseModel& noise,
                              sim::RngStream& rng) {
    if (shots == 0) throw std::invalid_argument("shots must be >= 1");
    const auto cdf = sim::cumulative(outcome_distribution(circuit, noise));
    sim::Histogram h(circuit.n_clbits());
    for (std::uint64_t s = 0; s < shots; ++s) ++h.counts[rng.categorical(cdf)];
    return h;
}

std::uint64_t run_trajectory(const Circuit& circuit, const NoiseModel& noise, sim::RngStream& rng) {
    noise.validate();
    if (noise.has_depolarizing()) return trajectory<MixedState>(lower(circuit), noise, rng);
    return trajectory<PureState>(circuit, noise, rng);
}

}  // namespace telecloning::circuits
