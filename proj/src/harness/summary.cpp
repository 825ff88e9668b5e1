#include "telecloning/harness/summary.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace telecloning::harness {

MeanSd mean_sd(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("summary of an empty set");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summary of an empty set");
    using Key = std::tuple<std::string, circuits::Mode, circuits::Connectivity, bool>;
    std::vector<Key> order;
    std::vector<std::vector<const SweepRecord*>> groups;
    for (const auto& r : records) {
        const Key key{r.circuit, r.mode, r.connectivity, r.mitigated};
        std::size_t g = 0;
        while (g < order.size() && order[g] != key) ++g;
        if (g == order.size()) {
            order.push_back(key);
            groups.emplace_back();
        }
        groups[g].push_back(&r);
    }
    std::vector<SummaryRow> rows;
    for (std::size_t g = 0; g < order.size(); ++g) {
        const auto& [circuit, mode, conn, mitigated] = order[g];
        std::vector<double> all;
        std::size_t n_clones = 0;
        for (const auto* r : groups[g]) {
            all.push_back(r->fidelity);
            n_clones = std::max(n_clones, r->clone + 1);
        }
        const auto pooled = mean_sd(all);
        rows.push_back({circuit, mode, conn, mitigated, std::nullopt, pooled.mean, pooled.sd, all.size()});
        for (std::size_t k = 0; k < n_clones; ++k) {
            std::vector<double> vals;
            for (const auto* r : groups[g]) {
                if (r->clone == k) vals.push_back(r->fidelity);
            }
            if (vals.empty()) continue;
            const auto s = mean_sd(vals);
            rows.push_back({circuit, mode, conn, mitigated, k, s.mean, s.sd, vals.size()});
        }
    }
    return rows;
}

std::vector<CostRow> cost_table(circuits::Connectivity connectivity) {
    std::vector<CostRow> rows;
    for (const char* id : {"pcc", "apcc", "pccc", "aapccc"}) {
        for (auto mode : {circuits::Mode::FeedForward, circuits::Mode::Deferred, circuits::Mode::PostSelect}) {
            auto spec = circuits::parse_circuit_id(id);
            spec.mode = mode;
            spec.connectivity = connectivity;
            rows.push_back({id, mode, connectivity, circuits::audit_cost(spec)});
        }
    }
    return rows;
}

}  // namespace telecloning::harness
