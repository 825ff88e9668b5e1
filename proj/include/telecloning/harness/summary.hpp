#pragma once

#include <optional>
#include <string>
#include <vector>

#include "telecloning/circuits/cost.hpp"
#include "telecloning/harness/sweep.hpp"

namespace telecloning::harness {

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;  // population
};

MeanSd mean_sd(const std::vector<double>& values);

struct SummaryRow {
    std::string circuit;
    circuits::Mode mode = circuits::Mode::FeedForward;
    circuits::Connectivity connectivity = circuits::Connectivity::Full;
    bool mitigated = false;
    std::optional<std::size_t> clone;  // empty: all clones pooled
    double mean = 0.0;
    double sd = 0.0;
    std::size_t count = 0;
};

/// Per (circuit, mode, connectivity, mitigated) group, in order of first
/// appearance: a pooled row over every grid point and clone, then one row
/// per clone.
std::vector<SummaryRow> summarize(const std::vector<SweepRecord>& records);

struct CostRow {
    std::string circuit;
    circuits::Mode mode = circuits::Mode::FeedForward;
    circuits::Connectivity connectivity = circuits::Connectivity::Full;
    circuits::CostAudit audit;
};

/// pcc, apcc, pccc, aapccc x feedforward, deferred, postselect.
std::vector<CostRow> cost_table(circuits::Connectivity connectivity);

}  // namespace telecloning::harness
