#include "telecloning/sim/measure.hpp"

#include <numeric>
#include <stdexcept>

namespace telecloning::sim {

namespace {

void check_qubits(const std::vector<std::size_t>& qubits, std::size_t n_qubits) {
    if (qubits.empty()) throw std::invalid_argument("measurement needs at least one qubit");
    if (qubits.size() > 24) throw std::invalid_argument("too many measured qubits");
    std::vector<bool> seen(n_qubits, false);
    for (auto q : qubits) {
        if (q >= n_qubits) throw std::out_of_range("measured qubit " + std::to_string(q) + " out of range");
        if (seen[q]) throw std::invalid_argument("qubit measured twice in one call");
        seen[q] = true;
    }
}

std::uint64_t outcome_of(std::size_t index, const std::vector<std::size_t>& qubits) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        out |= static_cast<std::uint64_t>((index >> qubits[j]) & 1U) << j;
    }
    return out;
}

template <class State>
std::vector<Branch<State>> branches_impl(const State& state, const std::vector<std::size_t>& qubits) {
    const auto probs = outcome_probabilities(state, qubits);
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    std::vector<Branch<State>> out;
    for (std::uint64_t k = 0; k < probs.size(); ++k) {
        if (probs[k] <= 0.0) continue;
        State s = state;
        project(s, qubits, k);
        s.normalize();
        out.push_back({probs[k] / total, k, std::move(s)});
    }
    return out;
}

template <class State>
std::uint64_t sample_impl(State& state, const std::vector<std::size_t>& qubits, RngStream& rng) {
    const auto probs = outcome_probabilities(state, qubits);
    const auto k = static_cast<std::uint64_t>(rng.categorical(cumulative(probs)));
    project(state, qubits, k);
    state.normalize();
    return k;
}

std::uint64_t read_through(std::uint64_t truth, const std::vector<std::size_t>& qubits, const NoiseModel& noise,
                           RngStream& rng) {
    std::uint64_t read = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        const int t = static_cast<int>((truth >> j) & 1U);
        const auto a = noise.readout_for(qubits[j]);
        if (rng.uniform() < a(1, t)) read |= std::uint64_t{1} << j;
    }
    return read;
}

template <class State>
Histogram counts_impl(const State& state, const std::vector<std::size_t>& qubits, std::uint64_t shots,
                      const NoiseModel& noise, RngStream& rng) {
    if (shots == 0) throw std::invalid_argument("shots must be >= 1");
    noise.validate();
    const auto cdf = cumulative(outcome_probabilities(state, qubits));
    const bool noisy = noise.has_readout();
    Histogram h(qubits.size());
    for (std::uint64_t s = 0; s < shots; ++s) {
        auto k = static_cast<std::uint64_t>(rng.categorical(cdf));
        if (noisy) k = read_through(k, qubits, noise, rng);
        ++h.counts[k];
    }
    return h;
}

}  // namespace

std::vector<double> outcome_probabilities(const PureState& state, const std::vector<std::size_t>& qubits) {
    check_qubits(qubits, state.n_qubits());
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    const auto& v = state.amplitudes();
    for (std::size_t i = 0; i < state.dim(); ++i) probs[outcome_of(i, qubits)] += std::norm(v(i));
    return probs;
}

std::vector<double> outcome_probabilities(const MixedState& state, const std::vector<std::size_t>& qubits) {
    check_qubits(qubits, state.n_qubits());
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    const auto& rho = state.matrix();
    for (std::size_t i = 0; i < state.dim(); ++i) probs[outcome_of(i, qubits)] += rho(i, i).real();
    for (auto& p : probs) p = std::max(p, 0.0);
    return probs;
}

std::vector<Branch<PureState>> exact_measure_branches(const PureState& state, const std::vector<std::size_t>& qubits) {
    return branches_impl(state, qubits);
}

std::vector<Branch<MixedState>> exact_measure_branches(const MixedState& state,
                                                       const std::vector<std::size_t>& qubits) {
    return branches_impl(state, qubits);
}

std::uint64_t sample_measure(PureState& state, const std::vector<std::size_t>& qubits, RngStream& rng) {
    return sample_impl(state, qubits, rng);
}

std::uint64_t sample_measure(MixedState& state, const std::vector<std::size_t>& qubits, RngStream& rng) {
    return sample_impl(state, qubits, rng);
}

double project(PureState& state, const std::vector<std::size_t>& qubits, std::uint64_t outcome) {
    check_qubits(qubits, state.n_qubits());
    auto& v = state.amplitudes_mut();
    const double before = v.squaredNorm();
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (outcome_of(i, qubits) != outcome) v(i) = 0.0;
    }
    return before > 0.0 ? v.squaredNorm() / before : 0.0;
}

double project(MixedState& state, const std::vector<std::size_t>& qubits, std::uint64_t outcome) {
    check_qubits(qubits, state.n_qubits());
    auto& rho = state.matrix_mut();
    const double before = rho.trace().real();
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (outcome_of(i, qubits) == outcome) continue;
        rho.row(static_cast<Eigen::Index>(i)).setZero();
        rho.col(static_cast<Eigen::Index>(i)).setZero();
    }
    return before > 0.0 ? rho.trace().real() / before : 0.0;
}

std::uint64_t Histogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t Histogram::at(const std::string& bits) const {
    if (bits.size() != n_bits) throw std::invalid_argument("bitstring width does not match histogram");
    return counts.at(index_from_bits(bits));
}

std::vector<double> apply_readout(const std::vector<double>& probabilities, const std::vector<std::size_t>& qubits,
                                  const NoiseModel& noise) {
    if (probabilities.size() != (std::size_t{1} << qubits.size())) {
        throw std::invalid_argument("distribution size does not match qubit count");
    }
    std::vector<double> cur = probabilities;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        const auto a = noise.readout_for(qubits[j]);
        if (a.isIdentity(0.0)) continue;
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (k & bit) continue;
            const double p0 = cur[k], p1 = cur[k | bit];
            cur[k] = a(0, 0) * p0 + a(0, 1) * p1;
            cur[k | bit] = a(1, 0) * p0 + a(1, 1) * p1;
        }
    }
    return cur;
}

Histogram sample_counts(const PureState& state, const std::vector<std::size_t>& qubits, std::uint64_t shots,
                        const NoiseModel& noise, RngStream& rng) {
    return counts_impl(state, qubits, shots, noise, rng);
}

Histogram sample_counts(const MixedState& state, const std::vector<std::size_t>& qubits, std::uint64_t shots,
                        const NoiseModel& noise, RngStream& rng) {
    return counts_impl(state, qubits, shots, noise, rng);
}

}  // namespace telecloning::sim
