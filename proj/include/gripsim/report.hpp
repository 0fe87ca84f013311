#pragma once

#include <cstdint>
#include <string>

#include "gripsim/joint.hpp"
#include "gripsim/montecarlo.hpp"

namespace gripsim {

// Shortest-ish fixed formatting used for every CSV number: printf %.9g,
// enough digits to round-trip the rates and intervals we emit.
std::string format_g9(double v);

// All artifacts open with the same provenance line so a result file can be
// traced back to the exact configuration and seed that produced it:
//   # config_hash=<16 hex> seed=<n>
std::string provenance_line(const std::string& config_hash, std::uint64_t seed);

// CSV with header campaign,cell_key,n,k,rate,ci_lo,ci_hi; one row per cell,
// LF line endings, '.' decimal separator.
std::string rates_csv(const SuccessRateReport& rep, const std::string& config_hash);
// Same report as JSON: campaign, config_hash, seed, assumptions, cells.
std::string rates_json(const SuccessRateReport& rep, const std::string& config_hash);

// Comparison report: the rate rows plus the per-condition minimum-closure
// summary (null when a mode cannot succeed within travel).
std::string compare_csv(const CompareReport& rep, const std::string& config_hash);
std::string compare_json(const CompareReport& rep, const std::string& config_hash);

// Model torque surface sampled on the factory grid axes (bend 0..80 deg step
// 5, pressure 0..150 kPa step 10): alpha_deg,pressure_kpa,torque_nmm.
std::string torque_map_csv(const JointStiffnessModel& model, const std::string& config_hash,
                           std::uint64_t seed);

// Calibration artifacts: the averaged grid, the fitted coefficients, and the
// per-cell residual summary of the fit.
std::string grid_json(const JointCalibrationGrid& grid, const std::string& config_hash,
                      std::uint64_t seed);
std::string model_json(const JointStiffnessModel& model, const std::string& config_hash,
                       std::uint64_t seed);
std::string residual_summary_json(const JointStiffnessModel& model,
                                  const JointCalibrationGrid& grid,
                                  const std::string& config_hash, std::uint64_t seed);

} // namespace gripsim
