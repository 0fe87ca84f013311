#include "gripsim/joint.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "gripsim/errors.hpp"
#include "gripsim/units.hpp"

namespace gripsim {

double JointCalibrationGrid::at(std::size_t i_alpha, std::size_t j_pressure) const {
    return torques[i_alpha * pressures.size() + j_pressure];
}

void JointCalibrationGrid::validate() const {
    if (alphas.empty() || pressures.empty()) throw DomainError("grid: empty axis");
    if (torques.size() != alphas.size() * pressures.size())
        throw DomainError("grid: torque matrix shape mismatch");
    if (!std::is_sorted(alphas.begin(), alphas.end()) ||
        !std::is_sorted(pressures.begin(), pressures.end()))
        throw DomainError("grid: axes must be sorted ascending");
    for (double a : alphas)
        if (!(a >= 0.0 && a <= 80.0)) throw DomainError("grid: alpha outside [0, 80] deg");
    for (double p : pressures)
        if (!(p >= 0.0 && p <= 150.0)) throw DomainError("grid: pressure outside [0, 150] kPa");
    for (double t : torques)
        if (!(t >= 0.0) || !std::isfinite(t))
            throw DomainError("grid: torques must be finite and >= 0");
}

void JointStiffnessModel::validate() const {
    if (!(k0 >= 0.0) || !(k1 >= 0.0)) throw DomainError("model: k0, k1 must be >= 0");
    if (!(residual_rmse >= 0.0)) throw DomainError("model: rmse must be >= 0");
}

double torque_from_forces(double f_y_n, double f_z_n, double alpha_deg, double a1_mm) {
    if (!(alpha_deg >= 0.0 && alpha_deg <= 90.0))
        throw DomainError("torque_from_forces: alpha outside [0, 90] deg");
    return f_z_n * a1_mm * sin_deg(alpha_deg) - f_y_n * a1_mm * cos_deg(alpha_deg);
}

namespace {

double parse_field(const std::string& field, long line_no, const char* name) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        while (pos < field.size() && (field[pos] == ' ' || field[pos] == '\t')) ++pos;
        if (pos != field.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("calibration log: bad ") + name + " value '" + field + "'",
                         line_no);
    }
}

} // namespace

std::vector<CalRow> parse_calibration_csv(std::istream& in) {
    std::vector<CalRow> rows;
    std::string line;
    long line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = line;
        stripped.erase(0, stripped.find_first_not_of(" \t"));
        if (stripped.empty() || stripped[0] == '#') continue;
        if (!saw_header) {
            std::string h = stripped;
            h.erase(std::remove_if(h.begin(), h.end(),
                                   [](char c) { return c == ' ' || c == '\t'; }),
                    h.end());
            if (h != "alpha_deg,pressure_kpa,fy_n,fz_n")
                throw ParseError("calibration log: expected header "
                                 "'alpha_deg,pressure_kpa,fy_n,fz_n', got '" + stripped + "'",
                                 line_no);
            saw_header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(stripped);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != 4)
            throw ParseError("calibration log: expected 4 comma-separated fields, got " +
                             std::to_string(fields.size()), line_no);
        CalRow r;
        r.alpha_deg = parse_field(fields[0], line_no, "alpha_deg");
        r.pressure_kpa = parse_field(fields[1], line_no, "pressure_kpa");
        r.f_y_n = parse_field(fields[2], line_no, "fy_n");
        r.f_z_n = parse_field(fields[3], line_no, "fz_n");
        rows.push_back(r);
    }
    if (!saw_header) throw ParseError("calibration log: no rows", -1);
    return rows;
}

std::vector<CalRow> parse_calibration_csv_text(const std::string& text) {
    std::istringstream in(text);
    return parse_calibration_csv(in);
}

JointCalibrationGrid ingest_calibration_log(const std::vector<CalRow>& rows, double a1_mm) {
    if (rows.empty()) throw IngestError("calibration log: no rows");
    std::map<double, std::size_t> alpha_ix, pressure_ix;
    for (const auto& r : rows) {
        if (!(r.alpha_deg >= 0.0 && r.alpha_deg <= 80.0))
            throw IngestError("calibration log: alpha " + std::to_string(r.alpha_deg) +
                              " deg outside protocol range [0, 80]");
        if (!(r.pressure_kpa >= 0.0 && r.pressure_kpa <= 150.0))
            throw IngestError("calibration log: pressure " + std::to_string(r.pressure_kpa) +
                              " kPa outside protocol range [0, 150]");
        alpha_ix.emplace(r.alpha_deg, 0);
        pressure_ix.emplace(r.pressure_kpa, 0);
    }
    JointCalibrationGrid grid;
    for (auto& [a, ix] : alpha_ix) {
        ix = grid.alphas.size();
        grid.alphas.push_back(a);
    }
    for (auto& [p, ix] : pressure_ix) {
        ix = grid.pressures.size();
        grid.pressures.push_back(p);
    }
    const std::size_t np = grid.pressures.size();
    std::vector<double> sum(grid.alphas.size() * np, 0.0);
    std::vector<int> count(grid.alphas.size() * np, 0);
    for (const auto& r : rows) {
        const std::size_t k = alpha_ix[r.alpha_deg] * np + pressure_ix[r.pressure_kpa];
        sum[k] += torque_from_forces(r.f_y_n, r.f_z_n, r.alpha_deg, a1_mm);
        count[k] += 1;
    }
    grid.torques.resize(sum.size());
    int min_count = rows.empty() ? 0 : count[0];
    for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            const std::size_t k = i * np + j;
            if (count[k] == 0)
                throw IngestError("calibration log: empty cell (alpha=" +
                                  std::to_string(grid.alphas[i]) + " deg, pressure=" +
                                  std::to_string(grid.pressures[j]) + " kPa)");
            const double mean = sum[k] / count[k];
            if (!(mean >= 0.0))
                throw IngestError("calibration log: negative mean torque in cell (alpha=" +
                                  std::to_string(grid.alphas[i]) + " deg, pressure=" +
                                  std::to_string(grid.pressures[j]) + " kPa)");
            grid.torques[k] = mean;
            min_count = std::min(min_count, count[k]);
        }
    }
    grid.trials_per_cell = min_count;
    grid.validate();
    return grid;
}

namespace {

std::size_t lower_cell(const std::vector<double>& axis, double x) {
    // index i with axis[i] <= x <= axis[i+1]; callers guarantee x within hull
    auto it = std::upper_bound(axis.begin(), axis.end(), x);
    std::size_t i = (it == axis.begin()) ? 0 : (it - axis.begin() - 1);
    if (i + 1 >= axis.size()) i = axis.size() - 2;
    return i;
}

} // namespace

double ring_torque_grid(const JointCalibrationGrid& grid, double alpha_deg,
                        double pressure_kpa) {
    grid.validate();
    if (grid.alphas.size() < 2 || grid.pressures.size() < 2)
        throw DomainError("ring_torque_grid: need at least a 2x2 grid to interpolate");
    if (alpha_deg < grid.alphas.front() || alpha_deg > grid.alphas.back())
        throw DomainError("ring_torque_grid: alpha outside calibration hull");
    if (pressure_kpa < grid.pressures.front() || pressure_kpa > grid.pressures.back())
        throw DomainError("ring_torque_grid: pressure outside calibration hull");
    const std::size_t i = lower_cell(grid.alphas, alpha_deg);
    const std::size_t j = lower_cell(grid.pressures, pressure_kpa);
    const double a0 = grid.alphas[i], a1 = grid.alphas[i + 1];
    const double p0 = grid.pressures[j], p1 = grid.pressures[j + 1];
    const double u = (alpha_deg - a0) / (a1 - a0);
    const double v = (pressure_kpa - p0) / (p1 - p0);
    return (1 - u) * (1 - v) * grid.at(i, j) + u * (1 - v) * grid.at(i + 1, j) +
           (1 - u) * v * grid.at(i, j + 1) + u * v * grid.at(i + 1, j + 1);
}

JointStiffnessModel fit_model(const JointCalibrationGrid& grid) {
    grid.validate();
    if (grid.alphas.size() < 2 || grid.pressures.size() < 2)
        throw DomainError("fit_model: need >= 2 alphas and >= 2 pressures");

    // Least squares for tau = (k0 + k1*p) * a_rad, linear in (k0, k1):
    // minimize sum (tau_ij - k0*a_i - k1*a_i*p_j)^2 with a in radians.
    double saa = 0, sap = 0, sapp = 0, sta = 0, stap = 0, stt = 0;
    for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
        const double a = deg2rad(grid.alphas[i]);
        for (std::size_t j = 0; j < grid.pressures.size(); ++j) {
            const double p = grid.pressures[j];
            const double t = grid.at(i, j);
            saa += a * a;
            sap += a * a * p;
            sapp += a * a * p * p;
            sta += t * a;
            stap += t * a * p;
            stt += t * t;
        }
    }
    JointStiffnessModel m;
    m.source_grid = "grid " + std::to_string(grid.alphas.size()) + "x" +
                    std::to_string(grid.pressures.size());
    const auto sse_for = [&](double k0, double k1) {
        return stt - 2 * (k0 * sta + k1 * stap) + k0 * k0 * saa + 2 * k0 * k1 * sap +
               k1 * k1 * sapp;
    };
    if (stt == 0.0) { // all-zero torques: degenerate calibration
        m.k0 = 0.0;
        m.k1 = 0.0;
        m.residual_rmse = 0.0;
        m.degenerate = true;
        return m;
    }
    const double det = saa * sapp - sap * sap;
    double k0, k1;
    if (std::fabs(det) > 1e-30 * saa * sapp) {
        k0 = (sta * sapp - stap * sap) / det;
        k1 = (saa * stap - sap * sta) / det;
    } else { // single pressure level cannot separate k0 from k1*p
        k0 = sta / saa;
        k1 = 0.0;
    }
    if (k0 < 0.0 || k1 < 0.0) {
        // active-set clamp: best fit on each boundary of the quadrant
        const double k1_only = sapp > 0 ? std::max(0.0, stap / sapp) : 0.0;
        const double k0_only = saa > 0 ? std::max(0.0, sta / saa) : 0.0;
        if (sse_for(0.0, k1_only) <= sse_for(k0_only, 0.0)) {
            k0 = 0.0;
            k1 = k1_only;
        } else {
            k0 = k0_only;
            k1 = 0.0;
        }
    }
    m.k0 = k0;
    m.k1 = k1;
    const double n = static_cast<double>(grid.torques.size());
    m.residual_rmse = std::sqrt(std::max(0.0, sse_for(k0, k1)) / n);
    m.validate();
    return m;
}

double ring_torque(const JointStiffnessModel& model, double alpha_deg, double pressure_kpa) {
    model.validate();
    if (!(alpha_deg >= 0.0)) throw DomainError("ring_torque: alpha must be >= 0");
    if (!(pressure_kpa >= 0.0)) throw DomainError("ring_torque: pressure must be >= 0");
    return (model.k0 + model.k1 * pressure_kpa) * deg2rad(alpha_deg);
}

double required_pressure(const JointStiffnessModel& model, double alpha_deg,
                         double tau_target) {
    model.validate();
    if (!(alpha_deg > 0.0)) throw DomainError("required_pressure: alpha must be > 0");
    const double baseline = ring_torque(model, alpha_deg, 0.0);
    if (tau_target < baseline)
        throw InfeasibleError("required_pressure: target torque below zero-pressure torque");
    if (model.k1 == 0.0) {
        if (tau_target == baseline) return 0.0;
        throw InfeasibleError("required_pressure: k1 = 0, torque cannot exceed baseline");
    }
    return (tau_target / deg2rad(alpha_deg) - model.k0) / model.k1;
}

JointCalibrationGrid default_calibration_grid() {
    JointCalibrationGrid g;
    for (int a = 0; a <= 80; a += 5) g.alphas.push_back(a);
    for (int p = 0; p <= 150; p += 10) g.pressures.push_back(p);
    g.torques.reserve(g.alphas.size() * g.pressures.size());
    for (double a : g.alphas)
        for (double p : g.pressures)
            g.torques.push_back((kDefaultK0 + kDefaultK1 * p) * deg2rad(a));
    g.trials_per_cell = 10;
    g.validate();
    return g;
}

JointStiffnessModel default_model() {
    JointStiffnessModel m = fit_model(default_calibration_grid());
    m.source_grid = "factory default";
    return m;
}

} // namespace gripsim
