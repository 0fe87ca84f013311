#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gripsim {

// One calibration-log row: rig state plus the two force-sensor channels.
struct CalRow {
    double alpha_deg;
    double pressure_kpa;
    double f_y_n;
    double f_z_n;
};

// Mean resisting torque per (alpha, pressure) cell, axes sorted ascending.
// torques is row-major: torques[i * pressures.size() + j] for (alphas[i], pressures[j]).
struct JointCalibrationGrid {
    std::vector<double> alphas;
    std::vector<double> pressures;
    std::vector<double> torques;
    int trials_per_cell = 0;

    double at(std::size_t i_alpha, std::size_t j_pressure) const;
    void validate() const;
};

// Separable torsion-spring model tau(alpha, p) = (k0 + k1 * p) * alpha_rad.
struct JointStiffnessModel {
    double k0 = 0.0;           // N*mm per rad
    double k1 = 0.0;           // N*mm per rad per kPa
    double residual_rmse = 0.0; // N*mm
    std::string source_grid;
    bool degenerate = false; // all-zero calibration; coefficients forced to 0

    void validate() const;
};

// Resisting torque inferred from the testing-fingertip force sensor:
// tau = F_z * a1 * sin(alpha) - F_y * a1 * cos(alpha). May be negative.
double torque_from_forces(double f_y_n, double f_z_n, double alpha_deg, double a1_mm);

// Parse the calibration CSV (header alpha_deg,pressure_kpa,fy_n,fz_n).
// Throws ParseError with a 1-based line number on malformed input.
std::vector<CalRow> parse_calibration_csv(std::istream& in);
std::vector<CalRow> parse_calibration_csv_text(const std::string& text);

// Group rows into the cross-product grid of observed alphas x pressures and
// average each cell's torque. A missing (alpha, pressure) combination or a
// negative cell mean throws IngestError naming the cell.
JointCalibrationGrid ingest_calibration_log(const std::vector<CalRow>& rows, double a1_mm = 50.0);

// Bilinear interpolation over the calibration surface; exact at nodes; no
// extrapolation (queries outside the hull throw DomainError).
double ring_torque_grid(const JointCalibrationGrid& grid, double alpha_deg, double pressure_kpa);

// Least-squares fit of (k0, k1) over all grid cells with nonnegativity clamps.
JointStiffnessModel fit_model(const JointCalibrationGrid& grid);

// tau = (k0 + k1 * p) * alpha_rad; 0 at alpha = 0; nondecreasing in both args.
double ring_torque(const JointStiffnessModel& model, double alpha_deg, double pressure_kpa);

// Algebraic inverse p = (tau / alpha_rad - k0) / k1; throws InfeasibleError
// when the target is unreachable (k1 = 0 or below the zero-pressure torque).
double required_pressure(const JointStiffnessModel& model, double alpha_deg, double tau_target);

// Factory calibration shipped with the simulator: a 17 x 16 grid (alpha 0..80
// step 5 deg, pressure 0..150 step 10 kPa) generated from the default model
// coefficients. Documented in reports as an assumption, not measured data.
inline constexpr double kDefaultK0 = 60.0; // N*mm per rad
inline constexpr double kDefaultK1 = 18.0; // N*mm per rad per kPa
JointCalibrationGrid default_calibration_grid();
JointStiffnessModel default_model();

} // namespace gripsim
