#pragma once

#include <string>
#include <vector>

#include "telecloning/harness/postselect.hpp"
#include "telecloning/harness/summary.hpp"
#include "telecloning/harness/sweep.hpp"

namespace telecloning::harness {

/// Shortest decimal that parses back to the same double; "nan" for NaN.
std::string format_double(double v);

/// Columns: circuit,mode,connectivity,theta_y,theta_z,clone,shots,mitigated,fidelity,seed.
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(const std::string& text);

/// {"config": {...}, "records": [...]} with the same record fields.
std::string sweep_json(const std::vector<SweepRecord>& records, const ExperimentConfig& config);
std::vector<SweepRecord> parse_sweep_json(const std::string& text);

std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string postselect_csv(const std::vector<PostselectRecord>& records);
std::string postselect_json(const std::vector<PostselectRecord>& records, const ExperimentConfig& config);
std::string cost_csv(const std::vector<CostRow>& rows);
std::string calibration_json(const tomo::CalibrationMatrix& cal, const std::vector<std::size_t>& qubits,
                             const ExperimentConfig& config);

/// Writes `content` to `path`, creating parent directories; throws IoError.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace telecloning::harness
