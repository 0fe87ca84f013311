#include "gripsim/config.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gripsim/errors.hpp"

namespace gripsim {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ParseError("unknown key \"" + it.key() + "\" in " + where);
    }
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw ParseError(where + "." + key + " must be a number");
    return v.get<double>();
}

// Two-element [lo, hi] array; writes through only when the key is present.
void get_range(const json& obj, const std::string& where, const std::string& key,
               double& lo, double& hi) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ParseError(where + "." + key + " must be a [lo, hi] number pair");
    lo = v[0].get<double>();
    hi = v[1].get<double>();
}

void parse_geometry(const json& g, FingertipGeometry& out) {
    if (!g.is_object()) throw ParseError("geometry must be an object");
    reject_unknown_keys(g, "geometry",
                        {"r_c_mm", "d1_mm", "beta_deg", "alpha_max_deg", "a1_mm"});
    out.r_c = get_number(g, "geometry", "r_c_mm", out.r_c);
    out.d1 = get_number(g, "geometry", "d1_mm", out.d1);
    out.beta = get_number(g, "geometry", "beta_deg", out.beta);
    out.alpha_max = get_number(g, "geometry", "alpha_max_deg", out.alpha_max);
    out.a1 = get_number(g, "geometry", "a1_mm", out.a1);
}

void parse_sheet(const json& s, SheetSpec& out) {
    if (!s.is_object()) throw ParseError("sheet must be an object");
    reject_unknown_keys(s, "sheet",
                        {"elastic_modulus_pa", "thickness_mm", "width_mm", "length_mm",
                         "areal_density_kg_m2", "initial_deflection_mm"});
    out.elastic_modulus_pa = get_number(s, "sheet", "elastic_modulus_pa", out.elastic_modulus_pa);
    out.thickness_mm = get_number(s, "sheet", "thickness_mm", out.thickness_mm);
    out.width_mm = get_number(s, "sheet", "width_mm", out.width_mm);
    out.length_mm = get_number(s, "sheet", "length_mm", out.length_mm);
    out.areal_density_kg_m2 = get_number(s, "sheet", "areal_density_kg_m2", out.areal_density_kg_m2);
    out.initial_deflection_mm = get_number(s, "sheet", "initial_deflection_mm", out.initial_deflection_mm);
}

void parse_stochastic(const json& s, StochasticParams& out) {
    if (!s.is_object()) throw ParseError("stochastic must be an object");
    reject_unknown_keys(s, "stochastic",
                        {"mu_tip_range", "mu_surface_range", "initial_deflection_range_mm",
                         "press_force_jitter"});
    get_range(s, "stochastic", "mu_tip_range", out.mu_tip_lo, out.mu_tip_hi);
    get_range(s, "stochastic", "mu_surface_range", out.mu_surface_lo, out.mu_surface_hi);
    get_range(s, "stochastic", "initial_deflection_range_mm", out.deflection_lo_mm,
              out.deflection_hi_mm);
    out.press_force_jitter = get_number(s, "stochastic", "press_force_jitter", out.press_force_jitter);
}

void parse_joint(const json& j, const std::string& base_dir, RunConfig& out) {
    if (!j.is_object()) throw ParseError("joint must be an object");
    reject_unknown_keys(j, "joint",
                        {"calibration_csv", "k0_nmm_per_rad", "k1_nmm_per_rad_per_kpa"});
    const bool has_csv = j.contains("calibration_csv");
    const bool has_k0 = j.contains("k0_nmm_per_rad");
    const bool has_k1 = j.contains("k1_nmm_per_rad_per_kpa");
    if (has_csv && (has_k0 || has_k1))
        throw ParseError("joint: give either calibration_csv or inline coefficients, not both");
    if (has_k0 != has_k1)
        throw ParseError("joint: inline coefficients need both k0_nmm_per_rad and k1_nmm_per_rad_per_kpa");
    if (!has_csv && !has_k0)
        throw ParseError("joint: give calibration_csv or inline coefficients (omit the block for the factory model)");
    if (has_csv) {
        const json& v = j.at("calibration_csv");
        if (!v.is_string()) throw ParseError("joint.calibration_csv must be a string path");
        fs::path p(v.get<std::string>());
        if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
        out.calibration_csv_path = p.lexically_normal().string();
    } else {
        out.inline_k0 = get_number(j, "joint", "k0_nmm_per_rad", 0.0);
        out.inline_k1 = get_number(j, "joint", "k1_nmm_per_rad_per_kpa", 0.0);
    }
}

void parse_compare(const json& c, RunConfig& out) {
    if (!c.is_object()) throw ParseError("compare must be an object");
    reject_unknown_keys(c, "compare", {"conditions"});
    if (!c.contains("conditions")) return;
    const json& arr = c.at("conditions");
    if (!arr.is_array() || arr.empty())
        throw ParseError("compare.conditions must be a non-empty array");
    std::vector<int> conds;
    const int n_bench = static_cast<int>(bench_conditions().size());
    for (const json& v : arr) {
        int idx = 0;
        if (v.is_number_integer()) {
            idx = v.get<int>();
        } else if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s.rfind("cond", 0) == 0) {
                try {
                    idx = std::stoi(s.substr(4));
                } catch (const std::exception&) {
                    idx = 0;
                }
            }
            if (idx == 0) throw ParseError("compare.conditions: unknown condition key \"" + s + "\"");
        } else {
            throw ParseError("compare.conditions entries must be condition ids");
        }
        if (idx < 1 || idx > n_bench) {
            char buf[80];
            std::snprintf(buf, sizeof(buf),
                          "compare.conditions: unknown condition key \"cond%d\"", idx);
            throw ParseError(buf);
        }
        conds.push_back(idx);
    }
    out.compare_conditions = conds;
}

void parse_objects(const json& arr, RunConfig& out) {
    if (!arr.is_array() || arr.empty())
        throw ParseError("objects must be a non-empty array");
    std::vector<NamedObject> objs;
    for (const json& o : arr) {
        if (!o.is_object()) throw ParseError("objects entries must be objects");
        reject_unknown_keys(o, "objects[]",
                            {"name", "mass_kg", "edge_factor", "grasp_height_mm", "contact_mu"});
        if (!o.contains("name") || !o.at("name").is_string())
            throw ParseError("objects[].name must be a string");
        NamedObject obj;
        obj.name = o.at("name").get<std::string>();
        obj.spec.mass_kg = get_number(o, "objects[]", "mass_kg", 0.0);
        obj.spec.edge_factor = get_number(o, "objects[]", "edge_factor", 1.0);
        obj.spec.grasp_height_mm = get_number(o, "objects[]", "grasp_height_mm", 40.0);
        if (o.contains("contact_mu"))
            obj.spec.contact_mu_override = get_number(o, "objects[]", "contact_mu", 0.0);
        objs.push_back(obj);
    }
    out.objects = objs;
}

} // namespace

void RunConfig::validate() const {
    geometry.validate();
    sheet.validate();
    stochastic.validate();
    if (calibration_csv_path && (inline_k0 || inline_k1))
        throw ParseError("joint: give either calibration_csv or inline coefficients, not both");
    if (inline_k0.has_value() != inline_k1.has_value())
        throw ParseError("joint: inline coefficients need both k0 and k1");
    if (calibration_csv_path && !fs::exists(*calibration_csv_path))
        throw ParseError("joint.calibration_csv: file not found: " + *calibration_csv_path);
    if (inline_k0 && (*inline_k0 < 0.0 || *inline_k1 < 0.0))
        throw ParseError("joint: inline coefficients must be non-negative");
    if (compare_conditions.empty())
        throw ParseError("compare.conditions must be non-empty");
    const int n_bench = static_cast<int>(bench_conditions().size());
    for (int c : compare_conditions)
        if (c < 1 || c > n_bench) throw ParseError("compare.conditions: id out of range");
    if (objects.empty()) throw ParseError("objects must be non-empty");
    for (const NamedObject& o : objects) {
        if (o.name.empty()) throw ParseError("objects[].name must be non-empty");
        o.spec.validate();
    }
    if (trials <= 0) throw ParseError("trials must be positive");
    if (out_dir.empty()) throw ParseError("out_dir must be non-empty");
}

RunConfig parse_config_text(const std::string& text, const std::string& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config root must be a JSON object");
    reject_unknown_keys(doc, "config",
                        {"seed", "trials", "out_dir", "geometry", "joint", "sheet",
                         "stochastic", "compare", "objects"});

    RunConfig cfg;
    if (doc.contains("seed")) {
        const json& v = doc.at("seed");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ParseError("seed must be a non-negative integer");
        cfg.stochastic.seed = v.get<std::uint64_t>();
    }
    if (doc.contains("trials")) {
        const json& v = doc.at("trials");
        if (!v.is_number_integer() || v.get<long long>() <= 0)
            throw ParseError("trials must be a positive integer");
        cfg.trials = v.get<int>();
    }
    if (doc.contains("out_dir")) {
        const json& v = doc.at("out_dir");
        if (!v.is_string()) throw ParseError("out_dir must be a string");
        cfg.out_dir = v.get<std::string>();
    }
    if (doc.contains("geometry")) parse_geometry(doc.at("geometry"), cfg.geometry);
    if (doc.contains("sheet")) parse_sheet(doc.at("sheet"), cfg.sheet);
    if (doc.contains("stochastic")) parse_stochastic(doc.at("stochastic"), cfg.stochastic);
    if (doc.contains("joint")) parse_joint(doc.at("joint"), base_dir, cfg);
    if (doc.contains("compare")) parse_compare(doc.at("compare"), cfg);
    if (doc.contains("objects")) parse_objects(doc.at("objects"), cfg);

    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw ParseError(std::string("config invalid: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    const std::string text = read_text_file(path);
    const std::string base = fs::path(path).parent_path().string();
    return parse_config_text(text, base);
}

JointStiffnessModel resolve_model(const RunConfig& cfg) {
    if (cfg.calibration_csv_path) {
        std::ifstream in(*cfg.calibration_csv_path, std::ios::binary);
        if (!in) throw ParseError("cannot open calibration log: " + *cfg.calibration_csv_path);
        const std::vector<CalRow> rows = parse_calibration_csv(in);
        const JointCalibrationGrid grid = ingest_calibration_log(rows, cfg.geometry.a1);
        JointStiffnessModel m = fit_model(grid);
        m.source_grid = fs::path(*cfg.calibration_csv_path).filename().string();
        return m;
    }
    if (cfg.inline_k0) {
        JointStiffnessModel m;
        m.k0 = *cfg.inline_k0;
        m.k1 = *cfg.inline_k1;
        m.residual_rmse = 0.0;
        m.source_grid = "inline config coefficients";
        m.degenerate = (m.k1 <= 0.0);
        return m;
    }
    return default_model();
}

std::string canonical_config(const RunConfig& cfg) {
    ordered_json j;
    j["seed"] = cfg.stochastic.seed;
    j["trials"] = cfg.trials;
    ordered_json g;
    g["r_c_mm"] = cfg.geometry.r_c;
    g["d1_mm"] = cfg.geometry.d1;
    g["beta_deg"] = cfg.geometry.beta;
    g["alpha_max_deg"] = cfg.geometry.alpha_max;
    g["a1_mm"] = cfg.geometry.a1;
    j["geometry"] = g;
    ordered_json jo;
    if (cfg.calibration_csv_path) {
        // Hash the file name, not the absolute path, so moving a workspace
        // does not change result identity.
        jo["calibration_csv"] = fs::path(*cfg.calibration_csv_path).filename().string();
    } else if (cfg.inline_k0) {
        jo["k0_nmm_per_rad"] = *cfg.inline_k0;
        jo["k1_nmm_per_rad_per_kpa"] = *cfg.inline_k1;
    } else {
        jo["model"] = "factory";
    }
    j["joint"] = jo;
    ordered_json s;
    s["elastic_modulus_pa"] = cfg.sheet.elastic_modulus_pa;
    s["thickness_mm"] = cfg.sheet.thickness_mm;
    s["width_mm"] = cfg.sheet.width_mm;
    s["length_mm"] = cfg.sheet.length_mm;
    s["areal_density_kg_m2"] = cfg.sheet.areal_density_kg_m2;
    s["initial_deflection_mm"] = cfg.sheet.initial_deflection_mm;
    j["sheet"] = s;
    ordered_json st;
    st["mu_tip_range"] = {cfg.stochastic.mu_tip_lo, cfg.stochastic.mu_tip_hi};
    st["mu_surface_range"] = {cfg.stochastic.mu_surface_lo, cfg.stochastic.mu_surface_hi};
    st["initial_deflection_range_mm"] = {cfg.stochastic.deflection_lo_mm,
                                         cfg.stochastic.deflection_hi_mm};
    st["press_force_jitter"] = cfg.stochastic.press_force_jitter;
    j["stochastic"] = st;
    j["compare_conditions"] = cfg.compare_conditions;
    ordered_json objs = ordered_json::array();
    for (const NamedObject& o : cfg.objects) {
        ordered_json e;
        e["name"] = o.name;
        e["mass_kg"] = o.spec.mass_kg;
        e["edge_factor"] = o.spec.edge_factor;
        e["grasp_height_mm"] = o.spec.grasp_height_mm;
        if (o.spec.contact_mu_override) e["contact_mu"] = *o.spec.contact_mu_override;
        objs.push_back(e);
    }
    j["objects"] = objs;
    return j.dump();
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string config_hash_hex(const RunConfig& cfg) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config(cfg))));
    return buf;
}

} // namespace gripsim
