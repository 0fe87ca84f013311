#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gripsim/geometry.hpp"
#include "gripsim/joint.hpp"
#include "gripsim/montecarlo.hpp"
#include "gripsim/sheet.hpp"

namespace gripsim {

// Everything a campaign run needs, loaded from one JSON document whose keys
// carry explicit units (d1_mm, pressure_kpa, ...). Unknown keys are rejected
// so a missing unit suffix cannot silently change meaning.
struct RunConfig {
    FingertipGeometry geometry;
    SheetSpec sheet;
    StochasticParams stochastic;
    // Joint model source: a calibration log to ingest and fit, or inline
    // coefficients; at most one, else the factory default model.
    std::optional<std::string> calibration_csv_path;
    std::optional<double> inline_k0;
    std::optional<double> inline_k1;
    std::vector<int> compare_conditions = {1, 2, 3};
    std::vector<NamedObject> objects = default_objects();
    std::string out_dir = "out";
    int trials = kDefaultTrials;

    void validate() const; // field invariants + joint-source exclusivity + paths exist
};

// Load and validate a config file. ParseError names the offending key/path.
RunConfig load_config(const std::string& path);
// Same, from an in-memory document; relative calibration paths resolve
// against base_dir.
RunConfig parse_config_text(const std::string& text, const std::string& base_dir);

// The stiffness model the config selects: ingest + fit the calibration log,
// use the inline coefficients, or fall back to the factory default.
JointStiffnessModel resolve_model(const RunConfig& cfg);

// Canonical serialization of the config (fixed key order, output dir
// excluded) and its FNV-1a 64-bit hash, embedded in every artifact.
std::string canonical_config(const RunConfig& cfg);
std::uint64_t fnv1a64(const std::string& bytes);
std::string config_hash_hex(const RunConfig& cfg);

} // namespace gripsim
