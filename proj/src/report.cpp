#include "gripsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace gripsim {

using ordered_json = nlohmann::ordered_json;

std::string format_g9(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string provenance_line(const std::string& config_hash, std::uint64_t seed) {
    std::ostringstream out;
    out << "# config_hash=" << config_hash << " seed=" << seed << "\n";
    return out.str();
}

namespace {

void append_cells_csv(std::ostringstream& out, const SuccessRateReport& rep) {
    out << "campaign,cell_key,n,k,rate,ci_lo,ci_hi\n";
    for (const RateCell& c : rep.cells) {
        out << rep.campaign_id << ',' << c.key << ',' << c.trials << ',' << c.successes
            << ',' << format_g9(c.rate) << ',' << format_g9(c.ci.lo) << ','
            << format_g9(c.ci.hi) << "\n";
    }
}

ordered_json cells_json(const SuccessRateReport& rep) {
    ordered_json cells = ordered_json::array();
    for (const RateCell& c : rep.cells) {
        ordered_json e;
        e["key"] = c.key;
        e["n"] = c.trials;
        e["k"] = c.successes;
        e["rate"] = c.rate;
        e["ci_lo"] = c.ci.lo;
        e["ci_hi"] = c.ci.hi;
        cells.push_back(e);
    }
    return cells;
}

ordered_json report_json(const SuccessRateReport& rep, const std::string& config_hash) {
    ordered_json j;
    j["campaign"] = rep.campaign_id;
    j["config_hash"] = config_hash;
    j["seed"] = rep.seed;
    j["assumptions"] = rep.assumptions;
    j["cells"] = cells_json(rep);
    return j;
}

} // namespace

std::string rates_csv(const SuccessRateReport& rep, const std::string& config_hash) {
    std::ostringstream out;
    out << provenance_line(config_hash, rep.seed);
    append_cells_csv(out, rep);
    return out.str();
}

std::string rates_json(const SuccessRateReport& rep, const std::string& config_hash) {
    return report_json(rep, config_hash).dump(2) + "\n";
}

std::string compare_csv(const CompareReport& rep, const std::string& config_hash) {
    return rates_csv(rep.rates, config_hash);
}

std::string compare_json(const CompareReport& rep, const std::string& config_hash) {
    ordered_json j = report_json(rep.rates, config_hash);
    ordered_json mins = ordered_json::array();
    for (const MinClosureSummary& m : rep.min_closures) {
        ordered_json e;
        e["condition"] = m.condition;
        e["min_closure_hybrid_mm"] =
            m.hybrid_mm ? ordered_json(*m.hybrid_mm) : ordered_json(nullptr);
        e["min_closure_rigid_mm"] =
            m.rigid_mm ? ordered_json(*m.rigid_mm) : ordered_json(nullptr);
        e["rigid_over_hybrid"] = m.ratio ? ordered_json(*m.ratio) : ordered_json(nullptr);
        mins.push_back(e);
    }
    j["min_closures"] = mins;
    return j.dump(2) + "\n";
}

std::string torque_map_csv(const JointStiffnessModel& model, const std::string& config_hash,
                           std::uint64_t seed) {
    std::ostringstream out;
    out << provenance_line(config_hash, seed);
    out << "alpha_deg,pressure_kpa,torque_nmm\n";
    for (int a = 0; a <= 80; a += 5)
        for (int p = 0; p <= 150; p += 10)
            out << a << ',' << p << ','
                << format_g9(ring_torque(model, a, p)) << "\n";
    return out.str();
}

std::string grid_json(const JointCalibrationGrid& grid, const std::string& config_hash,
                      std::uint64_t seed) {
    ordered_json j;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["alphas_deg"] = grid.alphas;
    j["pressures_kpa"] = grid.pressures;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < grid.pressures.size(); ++k) row.push_back(grid.at(i, k));
        rows.push_back(row);
    }
    j["torques_nmm"] = rows;
    j["trials_per_cell"] = grid.trials_per_cell;
    return j.dump(2) + "\n";
}

std::string model_json(const JointStiffnessModel& model, const std::string& config_hash,
                       std::uint64_t seed) {
    ordered_json j;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["k0_nmm_per_rad"] = model.k0;
    j["k1_nmm_per_rad_per_kpa"] = model.k1;
    j["residual_rmse_nmm"] = model.residual_rmse;
    j["source"] = model.source_grid;
    j["degenerate"] = model.degenerate;
    return j.dump(2) + "\n";
}

std::string residual_summary_json(const JointStiffnessModel& model,
                                  const JointCalibrationGrid& grid,
                                  const std::string& config_hash, std::uint64_t seed) {
    double worst = 0.0, worst_alpha = 0.0, worst_pressure = 0.0, sq_sum = 0.0;
    for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
        for (std::size_t k = 0; k < grid.pressures.size(); ++k) {
            const double r =
                grid.at(i, k) - ring_torque(model, grid.alphas[i], grid.pressures[k]);
            sq_sum += r * r;
            if (std::fabs(r) > std::fabs(worst)) {
                worst = r;
                worst_alpha = grid.alphas[i];
                worst_pressure = grid.pressures[k];
            }
        }
    }
    const std::size_t n = grid.alphas.size() * grid.pressures.size();
    ordered_json j;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["n_cells"] = n;
    j["rmse_nmm"] = n ? std::sqrt(sq_sum / static_cast<double>(n)) : 0.0;
    j["max_residual_nmm"] = worst;
    ordered_json w;
    w["alpha_deg"] = worst_alpha;
    w["pressure_kpa"] = worst_pressure;
    j["worst_cell"] = w;
    return j.dump(2) + "\n";
}

} // namespace gripsim
