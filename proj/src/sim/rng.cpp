#include "telecloning/sim/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace telecloning::sim {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t task_index) noexcept {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(task_index + 0x632be59bd9b4e019ULL));
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t task_index)
    : engine_(derive_seed(master_seed, task_index)) {}

double RngStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RngStream::categorical(const std::vector<double>& cumulative) {
    if (cumulative.empty() || !(cumulative.back() > 0.0)) {
        throw std::invalid_argument("categorical draw needs positive total weight");
    }
    const double u = uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
        // u rounded up to the total; step back over trailing zero-weight entries.
        --it;
        while (it != cumulative.begin() && *it == *(it - 1)) --it;
    }
    return static_cast<std::size_t>(it - cumulative.begin());
}

std::vector<double> cumulative(const std::vector<double>& weights) {
    std::vector<double> out(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0.0) throw std::invalid_argument("negative weight");
        acc += weights[i];
        out[i] = acc;
    }
    return out;
}

}  // namespace telecloning::sim
