#pragma once

#include <optional>
#include <vector>

#include "gripsim/geometry.hpp"
#include "gripsim/joint.hpp"
#include "gripsim/sheet.hpp"

namespace gripsim {

// Coulomb coefficients at the two interfaces: fingertip pad / object and
// object / support surface.
struct ContactParams {
    double mu_tip = 0.9;
    double mu_surface = 0.1;

    void validate() const; // both must lie in [0, 2]
};

enum class Mode { hybrid, rigid };

// Simple rigid grasp target: the squeeze-and-lift model only needs its mass
// and how much of the pad friction its edges let it use.
struct RigidObjectSpec {
    double mass_kg = 0.1;
    std::optional<double> contact_mu_override; // replaces the drawn mu_tip
    double grasp_height_mm = 40.0;             // descriptive metadata
    double edge_factor = 1.0;                  // (0,1]: friction derating

    void validate() const;
};

// One grasp experiment. In rigid mode the distal joint is locked straight
// (alpha = 0) and alpha0 is ignored.
struct GraspScenario {
    Mode mode = Mode::hybrid;
    double alpha0_deg = 45.0;
    double pressure_kpa = 120.0;
    double d_f0_mm = 30.0;      // finger-body separation before closing
    double close_by_mm = 5.0;   // commanded closing distance
    double press_force_n = 9.0; // commanded per-finger preload N1
    SheetSpec sheet;

    void validate(const FingertipGeometry& geom) const;
    // Joint angle the span bookkeeping is referenced to: alpha0 (hybrid) or 0 (rigid).
    double reference_alpha_deg() const;
};

// Snapshot of the contact forces: n1/ff1 at the fingertip, n2/ff2 at the
// surface, current joint angle and buckle rise. ff1 < 0 means the pad drags
// the sheet toward/up into the grasp (the success direction).
struct ForceState {
    double n1 = 0.0;
    double ff1 = 0.0;
    double n2 = 0.0;
    double ff2 = 0.0;
    double alpha_deg = 0.0;
    double w_mm = 0.0;
};

enum class FailureMode { none, tip_slip, no_buckle, hold_failure };

struct TrialOutcome {
    bool success = false;
    FailureMode failure_mode = FailureMode::no_buckle;
    double closure_used_mm = 0.0;
    std::vector<ForceState> force_trace;
    double springback_contribution_mm = 0.0;
};

const char* failure_mode_name(FailureMode m);

// Tuned model constants, fixed by the validation suite.
inline constexpr double kCloseStepMm = 0.1;       // closing increment
inline constexpr double kUnwindStepDeg = 0.05;    // spring-back march step
inline constexpr double kLiftRiseMultiple = 10.0; // w_lift = 10 * thickness
inline constexpr double kRiseFraction = 1.0;      // pinch needs w >= d1
inline constexpr double kDefaultContactAlphaDeg = 45.0; // rigid-object wedge pose

// Moment of a fingertip load about the distal joint with the contact at d1 and
// pad angle beta + alpha: n1*d1*sin(beta+alpha) - ff1*d1*cos(beta+alpha).
double press_balance_moment(double n1_n, double ff1_n, double alpha_deg,
                            const FingertipGeometry& geom);

// Joint angle after pressing with force N1: alpha0 if the ring already resists
// the fingertip moment there, otherwise the first balance angle above alpha0,
// or alpha_max when the ring gives way entirely (fold to the stop).
double settle_press_angle(const GraspScenario& scn, const FingertipGeometry& geom,
                          const JointStiffnessModel& model, const ContactParams& contact);

// Step 1: press the fingertips onto the sheet. Returns the settled state.
ForceState press_phase(const GraspScenario& scn, const FingertipGeometry& geom,
                       const JointStiffnessModel& model, const ContactParams& contact);

// Step 2: close the fingers and let the ring torque rotate the fingertip back,
// feeding end-shortening into the sheet until it buckles high enough to pinch.
TrialOutcome close_phase(const ForceState& pressed, const GraspScenario& scn,
                         const FingertipGeometry& geom, const JointStiffnessModel& model,
                         const ContactParams& contact, bool record_trace = true);

// Post-lift retention: both pads together must carry the sheet's weight.
bool hold_check(double w_mm, double n_grip_n, const SheetSpec& sheet,
                const ContactParams& contact);

// press_phase then close_phase then hold check, composed.
TrialOutcome run_trial(const GraspScenario& scn, const FingertipGeometry& geom,
                       const JointStiffnessModel& model, const ContactParams& contact,
                       bool record_trace = true);

// Smallest commanded closure that still succeeds, by bisection over
// [0, d_f0]; InfeasibleError if even full travel fails.
double min_closure_for_success(const GraspScenario& scn, const FingertipGeometry& geom,
                               const JointStiffnessModel& model,
                               const ContactParams& contact);

// Squeeze-and-lift check for a rigid object held at the wedged contact angle.
TrialOutcome grasp_rigid_object(const RigidObjectSpec& object, double pressure_kpa,
                                const FingertipGeometry& geom,
                                const JointStiffnessModel& model,
                                const ContactParams& contact,
                                double alpha_contact_deg = kDefaultContactAlphaDeg);

} // namespace gripsim
