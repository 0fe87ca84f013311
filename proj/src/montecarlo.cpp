#include "gripsim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gripsim/errors.hpp"
#include "gripsim/geometry.hpp"

namespace gripsim {

void StochasticParams::validate() const {
    const auto range_ok = [](double lo, double hi) { return lo <= hi; };
    if (!range_ok(mu_tip_lo, mu_tip_hi) || !range_ok(mu_surface_lo, mu_surface_hi) ||
        !range_ok(deflection_lo_mm, deflection_hi_mm))
        throw DomainError("stochastic: range lower bound exceeds upper bound");
    ContactParams{mu_tip_lo, mu_surface_lo}.validate();
    ContactParams{mu_tip_hi, mu_surface_hi}.validate();
    if (!(deflection_lo_mm >= 0.0))
        throw DomainError("stochastic: deflection range must be >= 0");
    if (!(press_force_jitter >= 0.0 && press_force_jitter < 1.0))
        throw DomainError("stochastic: press_force_jitter outside [0, 1)");
}

ContactParams StochasticParams::nominal_contact() const {
    return ContactParams{0.5 * (mu_tip_lo + mu_tip_hi),
                         0.5 * (mu_surface_lo + mu_surface_hi)};
}

double StochasticParams::nominal_deflection_mm() const {
    return 0.5 * (deflection_lo_mm + deflection_hi_mm);
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 stream keyed by (seed, trial index): cheap, stateless across
// trials, and identical on every platform.
struct Stream {
    std::uint64_t state;
    Stream(std::uint64_t seed, std::uint64_t index)
        : state(seed ^ (kGolden * (index + 1))) {}

    double next_u01() {
        state += kGolden;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_u01(); }
};

std::string key_of(const char* fmt, double a, double b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    return buf;
}

std::vector<std::string> base_assumptions() {
    return {
        "factory joint calibration is synthetic (generated from the default stiffness "
        "coefficients), not measured data",
        "stochastic ranges are modeling assumptions: mu_tip U[0.8,1.0], mu_surface "
        "U[0.05,0.15], initial deflection U[0.1,1.0] mm, press-force jitter +/-10%",
        "sheet buckling is referenced to the fixed span at the pressed pose; success "
        "requires the crest to rise to the fingertip link length",
    };
}

} // namespace

TrialDraw sample_params(const StochasticParams& stoch, std::uint64_t trial_index) {
    stoch.validate();
    Stream s(stoch.seed, trial_index);
    TrialDraw d;
    d.mu_tip = s.uniform(stoch.mu_tip_lo, stoch.mu_tip_hi);
    d.mu_surface = s.uniform(stoch.mu_surface_lo, stoch.mu_surface_hi);
    d.deflection_mm = s.uniform(stoch.deflection_lo_mm, stoch.deflection_hi_mm);
    d.force_scale = 1.0 + stoch.press_force_jitter * (2.0 * s.next_u01() - 1.0);
    return d;
}

WilsonInterval wilson_interval(int successes, int trials) {
    if (trials < 1) throw DomainError("wilson_interval: trials must be >= 1");
    if (successes < 0 || successes > trials)
        throw DomainError("wilson_interval: successes outside [0, trials]");
    constexpr double z = 1.959963984540054; // two-sided 95%
    const double n = trials;
    const double k = successes;
    const double denom = n + z * z;
    const double center = (k + z * z / 2.0) / denom;
    const double half = z * std::sqrt(k * (n - k) / n + z * z / 4.0) / denom;
    WilsonInterval w;
    w.lo = std::max(0.0, center - half);
    w.hi = std::min(1.0, center + half);
    return w;
}

RateCell success_rate(const std::string& key, const GraspScenario& scenario,
                      const FingertipGeometry& geom, const JointStiffnessModel& model,
                      const StochasticParams& stoch, int n_trials) {
    if (n_trials < 1) throw DomainError("success_rate: n_trials must be >= 1");
    stoch.validate();
    int k = 0;
    for (int i = 0; i < n_trials; ++i) {
        const TrialDraw d = sample_params(stoch, static_cast<std::uint64_t>(i));
        GraspScenario scn = scenario;
        scn.sheet.initial_deflection_mm = d.deflection_mm;
        scn.press_force_n = scenario.press_force_n * d.force_scale;
        const ContactParams contact{d.mu_tip, d.mu_surface};
        if (run_trial(scn, geom, model, contact, false).success) ++k;
    }
    RateCell cell;
    cell.key = key;
    cell.trials = n_trials;
    cell.successes = k;
    cell.rate = static_cast<double>(k) / n_trials;
    cell.ci = wilson_interval(k, n_trials);
    return cell;
}

const std::vector<BenchCondition>& bench_conditions() {
    static const std::vector<BenchCondition> conds = {
        {1, 35.0, 60.0, 6.0},
        {2, 45.0, 65.0, 9.0},
        {3, 65.0, 70.0, 14.0},
    };
    return conds;
}

GraspScenario condition_scenario(const BenchCondition& cond, Mode mode,
                                 double closure_mm, const FingertipGeometry& geom) {
    GraspScenario scn;
    scn.mode = mode;
    scn.alpha0_deg = cond.alpha0_deg;
    scn.pressure_kpa = kConditionPressureKpa;
    scn.press_force_n = cond.press_force_n;
    const double a_ref = (mode == Mode::hybrid) ? cond.alpha0_deg : 0.0;
    scn.d_f0_mm = cond.span_mm - 2.0 * extension(a_ref, geom);
    if (!(scn.d_f0_mm >= 0.0))
        throw DomainError("condition_scenario: span smaller than the fingertip reach");
    scn.close_by_mm = std::min(closure_mm, scn.d_f0_mm);
    return scn;
}

SuccessRateReport sweep_grasp_campaign(const FingertipGeometry& geom,
                                       const JointStiffnessModel& model,
                                       const StochasticParams& stoch, int n_trials) {
    SuccessRateReport rep;
    rep.campaign_id = "grasp-sweep";
    rep.seed = stoch.seed;
    rep.assumptions = base_assumptions();
    for (int ia = 0; ia < 3; ++ia) {
        GraspScenario scn;
        scn.mode = Mode::hybrid;
        scn.alpha0_deg = kSweepAlphasDeg[ia];
        scn.press_force_n = kSweepPressForcesN[ia];
        scn.d_f0_mm = kSweepSeparationMm;
        scn.close_by_mm = kSweepCloseByMm;
        for (double p = 0.0; p <= kPressureMaxKpa + 1e-9; p += kPressureStepKpa) {
            scn.pressure_kpa = p;
            rep.cells.push_back(success_rate(
                key_of("alpha%.0f_p%.0f", scn.alpha0_deg, p), scn, geom, model, stoch,
                n_trials));
        }
    }
    return rep;
}

std::vector<NamedObject> default_objects() {
    const auto make = [](std::string name, double mass, double edge, double height) {
        NamedObject o;
        o.name = std::move(name);
        o.spec.mass_kg = mass;
        o.spec.edge_factor = edge;
        o.spec.grasp_height_mm = height;
        return o;
    };
    return {
        make("toilet_roll", 0.12, 0.75, 95.0),
        make("plastic_box", 0.35, 0.45, 60.0),
        make("charger", 0.30, 0.35, 45.0),
        make("metal_stand", 1.39, 0.05, 120.0),
        make("glass_jar", 2.20, 0.05, 150.0),
    };
}

SuccessRateReport objects_campaign(const std::vector<NamedObject>& objects,
                                   const FingertipGeometry& geom,
                                   const JointStiffnessModel& model,
                                   const StochasticParams& stoch, int n_trials) {
    if (objects.empty()) throw DomainError("objects_campaign: empty object list");
    if (n_trials < 1) throw DomainError("objects_campaign: n_trials must be >= 1");
    stoch.validate();
    SuccessRateReport rep;
    rep.campaign_id = "objects";
    rep.seed = stoch.seed;
    rep.assumptions = base_assumptions();
    rep.assumptions.push_back(
        "object set is parametric (mass + edge friction derating); rates use the "
        "wedged-contact squeeze model at the default 45 deg pose");
    for (const NamedObject& obj : objects) {
        obj.spec.validate();
        for (double p = 0.0; p <= kPressureMaxKpa + 1e-9; p += kPressureStepKpa) {
            int k = 0;
            for (int i = 0; i < n_trials; ++i) {
                const TrialDraw d = sample_params(stoch, static_cast<std::uint64_t>(i));
                const ContactParams contact{d.mu_tip, d.mu_surface};
                if (grasp_rigid_object(obj.spec, p, geom, model, contact).success) ++k;
            }
            RateCell cell;
            cell.key = key_of((obj.name + "_p%.0f").c_str(), p, 0.0);
            cell.trials = n_trials;
            cell.successes = k;
            cell.rate = static_cast<double>(k) / n_trials;
            cell.ci = wilson_interval(k, n_trials);
            rep.cells.push_back(std::move(cell));
        }
    }
    return rep;
}

CompareReport rigid_vs_hybrid_campaign(const std::vector<BenchCondition>& conditions,
                                       const FingertipGeometry& geom,
                                       const JointStiffnessModel& model,
                                       const StochasticParams& stoch, int n_trials) {
    if (conditions.empty())
        throw DomainError("rigid_vs_hybrid_campaign: empty condition list");
    CompareReport rep;
    rep.rates.campaign_id = "compare-rigid";
    rep.rates.seed = stoch.seed;
    rep.rates.assumptions = base_assumptions();
    rep.rates.assumptions.push_back(
        "rigid mode locks the distal joint straight (alpha = 0) and passes the "
        "commanded preload through the pad unchanged");
    for (const BenchCondition& cond : conditions) {
        for (Mode mode : {Mode::hybrid, Mode::rigid}) {
            for (double cb = 0.0; cb <= kCompareClosureMaxMm + 1e-9;
                 cb += kCompareClosureStepMm) {
                const GraspScenario scn = condition_scenario(cond, mode, cb, geom);
                char key[64];
                std::snprintf(key, sizeof key, "cond%d_%s_c%.0f", cond.id,
                              mode == Mode::hybrid ? "hybrid" : "rigid", cb);
                rep.rates.cells.push_back(
                    success_rate(key, scn, geom, model, stoch, n_trials));
            }
        }

        MinClosureSummary sum;
        sum.condition = cond.id;
        const ContactParams nominal = stoch.nominal_contact();
        for (Mode mode : {Mode::hybrid, Mode::rigid}) {
            GraspScenario scn = condition_scenario(cond, mode, 0.0, geom);
            scn.sheet.initial_deflection_mm = stoch.nominal_deflection_mm();
            std::optional<double>& slot =
                (mode == Mode::hybrid) ? sum.hybrid_mm : sum.rigid_mm;
            try {
                slot = min_closure_for_success(scn, geom, model, nominal);
            } catch (const InfeasibleError&) {
                slot.reset();
                char note[96];
                std::snprintf(note, sizeof note,
                              "condition %d (%s): no success within finger travel; "
                              "min closure reported as null",
                              cond.id, mode == Mode::hybrid ? "hybrid" : "rigid");
                rep.rates.assumptions.push_back(note);
            }
        }
        if (sum.hybrid_mm && sum.rigid_mm && *sum.hybrid_mm > 1e-9)
            sum.ratio = *sum.rigid_mm / *sum.hybrid_mm;
        rep.min_closures.push_back(sum);
    }
    return rep;
}

} // namespace gripsim
