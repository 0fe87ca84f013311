#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gripsim/engine.hpp"

namespace gripsim {

// Uniform ranges for the parameters that vary between nominally identical
// trials, plus the seed of the counter-based stream that samples them.
struct StochasticParams {
    double mu_tip_lo = 0.8;
    double mu_tip_hi = 1.0;
    double mu_surface_lo = 0.05;
    double mu_surface_hi = 0.15;
    double deflection_lo_mm = 0.1;
    double deflection_hi_mm = 1.0;
    double press_force_jitter = 0.1; // relative half-width on the preload
    std::uint64_t seed = 42;

    void validate() const;
    // Range midpoints: the deterministic "median machine" used for nominal runs.
    ContactParams nominal_contact() const;
    double nominal_deflection_mm() const;
};

// One sampled parameter set.
struct TrialDraw {
    double mu_tip = 0.0;
    double mu_surface = 0.0;
    double deflection_mm = 0.0;
    double force_scale = 1.0; // multiplies the commanded press force
};

// Deterministic function of (seed, trial index): the same pair yields the same
// draw regardless of call order, enabling common random numbers across cells.
TrialDraw sample_params(const StochasticParams& stoch, std::uint64_t trial_index);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

// 95% Wilson score interval for k successes in n trials.
WilsonInterval wilson_interval(int successes, int trials);

struct RateCell {
    std::string key;
    int trials = 0;
    int successes = 0;
    double rate = 0.0;
    WilsonInterval ci;
};

struct SuccessRateReport {
    std::string campaign_id;
    std::uint64_t seed = 0;
    std::vector<std::string> assumptions;
    std::vector<RateCell> cells;
};

// Run n_trials sampled trials of the scenario. Draw i replaces the contact
// coefficients, the sheet imperfection and scales the press force; trial i of
// every cell in a campaign sees the same draw i.
RateCell success_rate(const std::string& key, const GraspScenario& scenario,
                      const FingertipGeometry& geom, const JointStiffnessModel& model,
                      const StochasticParams& stoch, int n_trials);

// Campaign grids, fixed by the validation protocol.
inline constexpr double kSweepAlphasDeg[3] = {35.0, 45.0, 65.0};
inline constexpr double kSweepPressForcesN[3] = {6.0, 9.0, 14.0};
inline constexpr double kPressureMaxKpa = 150.0;
inline constexpr double kPressureStepKpa = 10.0;
inline constexpr double kSweepSeparationMm = 30.0;
inline constexpr double kSweepCloseByMm = 5.0;
inline constexpr double kConditionPressureKpa = 120.0;
inline constexpr double kCompareClosureMaxMm = 50.0;
inline constexpr double kCompareClosureStepMm = 5.0;
inline constexpr int kDefaultTrials = 1000;

// Bench conditions for the two-mode comparison: commanded bend, contact span
// at press, and per-finger press force.
struct BenchCondition {
    int id = 0;
    double alpha0_deg = 0.0;
    double span_mm = 0.0;
    double press_force_n = 0.0;
};
const std::vector<BenchCondition>& bench_conditions();

// Scenario for a bench condition: the finger separation is back-solved so the
// contact span at the pressed pose equals the condition span; the commanded
// closure is clamped to the available travel.
GraspScenario condition_scenario(const BenchCondition& cond, Mode mode,
                                 double closure_mm, const FingertipGeometry& geom);

// Sheet-grasp success over bend angle x pressure (fixed separation and stroke).
SuccessRateReport sweep_grasp_campaign(const FingertipGeometry& geom,
                                       const JointStiffnessModel& model,
                                       const StochasticParams& stoch, int n_trials);

struct NamedObject {
    std::string name;
    RigidObjectSpec spec;
};
std::vector<NamedObject> default_objects();

// Rigid-object success over object x pressure.
SuccessRateReport objects_campaign(const std::vector<NamedObject>& objects,
                                   const FingertipGeometry& geom,
                                   const JointStiffnessModel& model,
                                   const StochasticParams& stoch, int n_trials);

// Nominal-parameter minimum closures per condition; a mode is null when it
// cannot succeed within the finger travel.
struct MinClosureSummary {
    int condition = 0;
    std::optional<double> hybrid_mm;
    std::optional<double> rigid_mm;
    std::optional<double> ratio; // rigid / hybrid when both are present
};

struct CompareReport {
    SuccessRateReport rates;
    std::vector<MinClosureSummary> min_closures;
};

// Hybrid vs locked-joint success over condition x mode x commanded closure,
// plus the per-condition minimum-closure summary.
CompareReport rigid_vs_hybrid_campaign(const std::vector<BenchCondition>& conditions,
                                       const FingertipGeometry& geom,
                                       const JointStiffnessModel& model,
                                       const StochasticParams& stoch, int n_trials);

} // namespace gripsim
