#include "gripsim/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gripsim/config.hpp"
#include "gripsim/errors.hpp"
#include "gripsim/report.hpp"
#include "gripsim/svg.hpp"

namespace gripsim {

namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    long long seed = -1;   // -1: not given
    int trials = 0;        // 0: not given
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--config", o.config_path, "JSON run configuration file");
    sub->add_option("--out", o.out_dir, "output directory (overrides the config)");
    sub->add_option("--seed", o.seed, "RNG seed (overrides the config)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--trials", o.trials, "trials per cell (overrides the config)")
        ->check(CLI::PositiveNumber);
}

RunConfig make_config(const CommonOpts& o) {
    RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
    if (o.seed >= 0) cfg.stochastic.seed = static_cast<std::uint64_t>(o.seed);
    if (o.trials > 0) cfg.trials = o.trials;
    if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
    cfg.validate();
    return cfg;
}

fs::path prepare_out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ParseError("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) throw ParseError("write failed: " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

// ---- subcommand bodies ------------------------------------------------------

int cmd_calibrate(const CommonOpts& o, const std::string& log_path) {
    const RunConfig cfg = make_config(o);
    std::ifstream in(log_path, std::ios::binary);
    if (!in) throw ParseError("cannot open calibration log: " + log_path);
    const std::vector<CalRow> rows = parse_calibration_csv(in);
    const JointCalibrationGrid grid = ingest_calibration_log(rows, cfg.geometry.a1);
    JointStiffnessModel model = fit_model(grid);
    model.source_grid = fs::path(log_path).filename().string();

    const std::string hash = config_hash_hex(cfg);
    const fs::path dir = prepare_out_dir(cfg);
    write_file(dir / "calibration_grid.json", grid_json(grid, hash, cfg.stochastic.seed));
    write_file(dir / "joint_model.json", model_json(model, hash, cfg.stochastic.seed));
    write_file(dir / "residual_summary.json",
               residual_summary_json(model, grid, hash, cfg.stochastic.seed));
    std::cout << "fit: k0=" << format_g9(model.k0) << " N*mm/rad, k1=" << format_g9(model.k1)
              << " N*mm/rad/kPa, rmse=" << format_g9(model.residual_rmse) << " N*mm\n";
    return 0;
}

int cmd_torque_map(const CommonOpts& o) {
    const RunConfig cfg = make_config(o);
    const JointStiffnessModel model = resolve_model(cfg);
    const std::string hash = config_hash_hex(cfg);
    const fs::path dir = prepare_out_dir(cfg);
    write_file(dir / "torque_map.csv", torque_map_csv(model, hash, cfg.stochastic.seed));

    std::vector<PlotSeries> series;
    for (int p = 0; p <= 150; p += 30) {
        PlotSeries s;
        s.label = std::to_string(p) + " kPa";
        for (int a = 0; a <= 80; a += 5)
            s.points.emplace_back(a, ring_torque(model, a, p));
        series.push_back(std::move(s));
    }
    write_file(dir / "torque_map.svg",
               line_plot_svg("Ring joint resisting torque", "bend angle (deg)",
                             "torque (N*mm)", series));
    return 0;
}

void write_rate_artifacts(const RunConfig& cfg, const SuccessRateReport& rep,
                          const std::string& stem, const std::string& svg_title,
                          const std::string& x_label,
                          const std::vector<PlotSeries>& series) {
    const std::string hash = config_hash_hex(cfg);
    const fs::path dir = prepare_out_dir(cfg);
    write_file(dir / (stem + ".csv"), rates_csv(rep, hash));
    write_file(dir / (stem + ".json"), rates_json(rep, hash));
    write_file(dir / (stem + ".svg"),
               line_plot_svg(svg_title, x_label, "success rate", series, 0.0, 1.05));
}

int cmd_grasp_sweep(const CommonOpts& o) {
    const RunConfig cfg = make_config(o);
    const JointStiffnessModel model = resolve_model(cfg);
    const SuccessRateReport rep =
        sweep_grasp_campaign(cfg.geometry, model, cfg.stochastic, cfg.trials);

    std::vector<PlotSeries> series(3);
    const int per_alpha = static_cast<int>(kPressureMaxKpa / kPressureStepKpa) + 1;
    for (int i = 0; i < 3; ++i) {
        char label[40];
        std::snprintf(label, sizeof(label), "bend %.0f deg", kSweepAlphasDeg[i]);
        series[i].label = label;
        for (int j = 0; j < per_alpha; ++j) {
            const RateCell& c = rep.cells[static_cast<std::size_t>(i * per_alpha + j)];
            series[i].points.emplace_back(j * kPressureStepKpa, c.rate);
        }
    }
    write_rate_artifacts(cfg, rep, "grasp_sweep", "Sheet grasp success vs ring pressure",
                         "ring pressure (kPa)", series);
    std::cout << "campaign " << rep.campaign_id << ": " << rep.cells.size() << " cells, "
              << cfg.trials << " trials each, seed " << rep.seed << "\n";
    return 0;
}

int cmd_objects(const CommonOpts& o) {
    const RunConfig cfg = make_config(o);
    const JointStiffnessModel model = resolve_model(cfg);
    const SuccessRateReport rep =
        objects_campaign(cfg.objects, cfg.geometry, model, cfg.stochastic, cfg.trials);

    const int per_obj = static_cast<int>(kPressureMaxKpa / kPressureStepKpa) + 1;
    std::vector<PlotSeries> series(cfg.objects.size());
    for (std::size_t i = 0; i < cfg.objects.size(); ++i) {
        series[i].label = cfg.objects[i].name;
        for (int j = 0; j < per_obj; ++j) {
            const RateCell& c =
                rep.cells[i * static_cast<std::size_t>(per_obj) + static_cast<std::size_t>(j)];
            series[i].points.emplace_back(j * kPressureStepKpa, c.rate);
        }
    }
    write_rate_artifacts(cfg, rep, "objects", "Rigid object grasp success vs ring pressure",
                         "ring pressure (kPa)", series);
    std::cout << "campaign " << rep.campaign_id << ": " << cfg.objects.size() << " objects, "
              << rep.cells.size() << " cells, seed " << rep.seed << "\n";
    return 0;
}

int cmd_compare(const CommonOpts& o) {
    const RunConfig cfg = make_config(o);
    const JointStiffnessModel model = resolve_model(cfg);
    std::vector<BenchCondition> conds;
    for (int id : cfg.compare_conditions)
        conds.push_back(bench_conditions()[static_cast<std::size_t>(id - 1)]);
    const CompareReport rep =
        rigid_vs_hybrid_campaign(conds, cfg.geometry, model, cfg.stochastic, cfg.trials);

    // One series per condition x mode over commanded closure.
    const int per_mode = static_cast<int>(kCompareClosureMaxMm / kCompareClosureStepMm) + 1;
    std::vector<PlotSeries> series;
    for (std::size_t ci = 0; ci < conds.size(); ++ci) {
        for (int m = 0; m < 2; ++m) {
            PlotSeries s;
            char label[40];
            std::snprintf(label, sizeof(label), "cond%d %s", conds[ci].id,
                          m == 0 ? "hybrid" : "rigid");
            s.label = label;
            const std::size_t base = (2 * ci + static_cast<std::size_t>(m)) *
                                     static_cast<std::size_t>(per_mode);
            for (int j = 0; j < per_mode; ++j) {
                const RateCell& c = rep.rates.cells[base + static_cast<std::size_t>(j)];
                s.points.emplace_back(j * kCompareClosureStepMm, c.rate);
            }
            series.push_back(std::move(s));
        }
    }
    const std::string hash = config_hash_hex(cfg);
    const fs::path dir = prepare_out_dir(cfg);
    write_file(dir / "compare_rigid.csv", compare_csv(rep, hash));
    write_file(dir / "compare_rigid.json", compare_json(rep, hash));
    write_file(dir / "compare_rigid.svg",
               line_plot_svg("Hybrid vs locked-joint grasp success", "commanded closure (mm)",
                             "success rate", series, 0.0, 1.05));
    for (const MinClosureSummary& m : rep.min_closures) {
        std::cout << "cond" << m.condition << " min closure: hybrid=";
        if (m.hybrid_mm) std::cout << format_g9(*m.hybrid_mm) << " mm";
        else std::cout << "n/a";
        std::cout << ", rigid=";
        if (m.rigid_mm) std::cout << format_g9(*m.rigid_mm) << " mm";
        else std::cout << "n/a";
        if (m.ratio) std::cout << ", rigid/hybrid=" << format_g9(*m.ratio);
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Two-finger hybrid gripper quasi-static grasp simulator"};
    app.require_subcommand(1);

    CommonOpts o_cal, o_map, o_sweep, o_cmp, o_obj;
    std::string log_path;

    CLI::App* cal = app.add_subcommand(
        "calibrate", "Fit the ring stiffness model from a torque calibration log");
    add_common(cal, o_cal);
    cal->add_option("--log", log_path, "calibration log CSV (alpha_deg,pressure_kpa,fy_n,fz_n)")
        ->required();

    CLI::App* map = app.add_subcommand("torque-map", "Tabulate and plot the model torque surface");
    add_common(map, o_map);

    CLI::App* sweep = app.add_subcommand(
        "grasp-sweep", "Sheet-grasp success over bend angle x ring pressure");
    add_common(sweep, o_sweep);

    CLI::App* cmp = app.add_subcommand(
        "compare-rigid", "Hybrid vs locked-joint closing-distance comparison");
    add_common(cmp, o_cmp);

    CLI::App* obj = app.add_subcommand("objects", "Rigid-object success over object x pressure");
    add_common(obj, o_obj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cal->parsed()) return cmd_calibrate(o_cal, log_path);
        if (map->parsed()) return cmd_torque_map(o_map);
        if (sweep->parsed()) return cmd_grasp_sweep(o_sweep);
        if (cmp->parsed()) return cmd_compare(o_cmp);
        if (obj->parsed()) return cmd_objects(o_obj);
    } catch (const gripsim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IngestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 4; // unreachable: a subcommand is required
}

} // namespace gripsim
