#include "gripsim/engine.hpp"

#include <algorithm>
#include <cmath>

#include "gripsim/errors.hpp"
#include "gripsim/units.hpp"

namespace gripsim {

void ContactParams::validate() const {
    if (!(mu_tip >= 0.0 && mu_tip <= 2.0))
        throw DomainError("contact: mu_tip outside [0, 2]");
    if (!(mu_surface >= 0.0 && mu_surface <= 2.0))
        throw DomainError("contact: mu_surface outside [0, 2]");
}

void RigidObjectSpec::validate() const {
    if (!(mass_kg > 0.0)) throw DomainError("object: mass must be > 0");
    if (!(edge_factor > 0.0 && edge_factor <= 1.0))
        throw DomainError("object: edge_factor outside (0, 1]");
    if (contact_mu_override && !(*contact_mu_override >= 0.0 && *contact_mu_override <= 2.0))
        throw DomainError("object: contact_mu_override outside [0, 2]");
    if (!(grasp_height_mm >= 0.0)) throw DomainError("object: grasp_height must be >= 0");
}

void GraspScenario::validate(const FingertipGeometry& geom) const {
    geom.validate();
    sheet.validate();
    if (mode == Mode::hybrid && !(alpha0_deg > 0.0 && alpha0_deg <= geom.alpha_max))
        throw DomainError("scenario: hybrid alpha0 outside (0, alpha_max]");
    if (!(pressure_kpa >= 0.0)) throw DomainError("scenario: pressure must be >= 0");
    if (!(d_f0_mm >= 0.0 && d_f0_mm <= 100.0))
        throw DomainError("scenario: d_f0 outside [0, 100] mm");
    if (!(press_force_n > 0.0)) throw DomainError("scenario: press_force must be > 0");
    if (!(close_by_mm >= 0.0)) throw DomainError("scenario: close_by must be >= 0");
    if (!(close_by_mm <= d_f0_mm + 1e-9))
        throw DomainError("scenario: close_by exceeds available finger travel d_f0");
}

double GraspScenario::reference_alpha_deg() const {
    return mode == Mode::hybrid ? alpha0_deg : 0.0;
}

const char* failure_mode_name(FailureMode m) {
    switch (m) {
        case FailureMode::none: return "none";
        case FailureMode::tip_slip: return "tip_slip";
        case FailureMode::no_buckle: return "no_buckle";
        case FailureMode::hold_failure: return "hold_failure";
    }
    return "?";
}

double press_balance_moment(double n1_n, double ff1_n, double alpha_deg,
                            const FingertipGeometry& geom) {
    const double psi = geom.beta + alpha_deg;
    return n1_n * geom.d1 * sin_deg(psi) - ff1_n * geom.d1 * cos_deg(psi);
}

double settle_press_angle(const GraspScenario& scn, const FingertipGeometry& geom,
                          const JointStiffnessModel& model, const ContactParams& contact) {
    scn.validate(geom);
    contact.validate();
    if (scn.mode == Mode::rigid) return 0.0;
    const double n1 = scn.press_force_n;
    // While the joint folds back, the pad slides down the sheet, so kinetic
    // friction mu_tip * n1 opposes the fold: drive = n1*d1*sin(psi) - ff1*d1*cos(psi).
    const auto drive = [&](double a) {
        return press_balance_moment(n1, contact.mu_tip * n1, a, geom);
    };
    const auto ring = [&](double a) { return ring_torque(model, a, scn.pressure_kpa); };
    if (ring(scn.alpha0_deg) >= drive(scn.alpha0_deg)) return scn.alpha0_deg;
    double a = scn.alpha0_deg;
    while (a < geom.alpha_max) {
        const double a2 = std::min(a + 0.1, geom.alpha_max);
        if (ring(a2) >= drive(a2)) {
            double lo = a, hi = a2;
            for (int i = 0; i < 60; ++i) {
                const double m = 0.5 * (lo + hi);
                (ring(m) >= drive(m) ? hi : lo) = m;
            }
            return 0.5 * (lo + hi);
        }
        a = a2;
    }
    return geom.alpha_max; // ring gives way entirely: joint folds to the stop
}

ForceState press_phase(const GraspScenario& scn, const FingertipGeometry& geom,
                       const JointStiffnessModel& model, const ContactParams& contact) {
    const double alpha = settle_press_angle(scn, geom, model, contact);
    ForceState s;
    s.n1 = scn.press_force_n;
    s.ff1 = 0.0;
    s.n2 = scn.sheet.weight_n() + 2.0 * scn.press_force_n;
    s.ff2 = 0.0;
    s.alpha_deg = alpha;
    s.w_mm = scn.sheet.initial_deflection_mm;
    return s;
}

bool hold_check(double w_mm, double n_grip_n, const SheetSpec& sheet,
                const ContactParams& contact) {
    if (!(w_mm >= 0.0)) throw DomainError("hold_check: w must be >= 0");
    if (!(n_grip_n >= 0.0)) throw DomainError("hold_check: n_grip must be >= 0");
    contact.validate();
    return 2.0 * contact.mu_tip * n_grip_n >= sheet.weight_n();
}

namespace {

// Ring-sustainable pad normal while the fingertip rotates back: the ring
// torque tau works against the contact normal's moment plus pad friction,
// n1 * d1 * (sin(psi) + mu * cos(psi)).
double ring_sustained_normal(double alpha_deg, double pressure_kpa,
                             const FingertipGeometry& geom,
                             const JointStiffnessModel& model, double mu_tip) {
    const double psi = geom.beta + alpha_deg;
    const double den = geom.d1 * (sin_deg(psi) + mu_tip * cos_deg(psi));
    if (den <= 1e-9) return 0.0;
    return std::max(0.0, ring_torque(model, alpha_deg, pressure_kpa) / den);
}

} // namespace

TrialOutcome close_phase(const ForceState& pressed, const GraspScenario& scn,
                         const FingertipGeometry& geom, const JointStiffnessModel& model,
                         const ContactParams& contact, bool record_trace) {
    scn.validate(geom);
    contact.validate();
    const SheetSpec& sheet = scn.sheet;
    const double alpha_settled = pressed.alpha_deg;
    const double alpha_ref = scn.reference_alpha_deg();

    // Span between the two contact points at the reference pose; the buckling
    // threshold and amplitude are referenced to this fixed span for the trial.
    const double span = contact_span(scn.d_f0_mm, alpha_ref, geom);
    const double p_cr = critical_buckling_load(sheet, span) * imperfection_knockdown(sheet);
    const double w_lift = kLiftRiseMultiple * sheet.thickness_mm;
    const double w_need = kRiseFraction * geom.d1;
    const double n20 = sheet.weight_n() + 2.0 * scn.press_force_n;
    // End-shortening equivalent of the initial mid-span bump delta0.
    const double d0 = sheet.initial_deflection_mm;
    const double c_seed = (kPi * d0 / 2.0) * (kPi * d0 / 2.0) / span;

    const auto w_of = [&](double c) {
        return (2.0 / kPi) * std::sqrt(std::max(span * c, 0.0));
    };
    const auto n2_of = [&](double w) { return n20 * std::max(0.0, 1.0 - w / w_lift); };
    // Compressive load the pads must feed through friction to keep the sheet
    // buckling while it still drags on the surface.
    const auto p_dem = [&](double w) { return p_cr + contact.mu_surface * n2_of(w); };

    TrialOutcome out;
    if (record_trace) out.force_trace.push_back(pressed);

    // Per-tip tangential capacity during closing: the ring can only press the
    // pad as hard as its torque sustains (hybrid); a locked joint passes the
    // commanded preload through rigidly.
    const double n1_close =
        scn.mode == Mode::hybrid
            ? ring_sustained_normal(alpha_settled, scn.pressure_kpa, geom, model,
                                    contact.mu_tip)
            : scn.press_force_n;

    double c = c_seed;
    bool delivered = false;
    bool slipped = false;
    double s = 0.0;
    while (s < scn.close_by_mm - 1e-12) {
        const double ds = std::min(kCloseStepMm, scn.close_by_mm - s);
        const double w = w_of(c);
        if (contact.mu_tip * n1_close >= p_dem(w)) {
            c += ds;
            delivered = true;
            if (record_trace) {
                const double wn = w_of(c);
                out.force_trace.push_back(ForceState{n1_close, -p_dem(w), n2_of(wn),
                                                     contact.mu_surface * n2_of(wn),
                                                     alpha_settled, wn});
            }
        } else {
            slipped = true;
            if (record_trace) {
                // The pad skids outward over the stationary sheet, so its drag on
                // the sheet points out of the grasp (positive), capped by what the
                // surface lets the sheet react.
                const double drag = std::min(contact.mu_tip * n1_close,
                                             contact.mu_surface * n2_of(w));
                out.force_trace.push_back(ForceState{n1_close, contact.mu_tip * n1_close,
                                                     n2_of(w), drag, alpha_settled, w});
            }
        }
        s += ds;
    }

    // Spring-back: the ring unwinds the fingertip from the deepest pose at or
    // below 90 deg pad angle, feeding 2*d(extension) of end-shortening per step
    // until pad friction can no longer keep the sheet loaded.
    double alpha_final = alpha_settled;
    if (scn.mode == Mode::hybrid && delivered) {
        const double a_hi = std::min(scn.alpha0_deg, 90.0 - geom.beta);
        double a = a_hi;
        double next_trace_mark = a_hi;
        while (a > 0.0) {
            const double n1u =
                ring_sustained_normal(a, scn.pressure_kpa, geom, model, contact.mu_tip);
            if (contact.mu_tip * n1u < p_dem(w_of(c))) break;
            const double a2 = std::max(0.0, a - kUnwindStepDeg);
            c += 2.0 * (extension(a, geom) - extension(a2, geom));
            a = a2;
            alpha_final = a;
            if (record_trace && a <= next_trace_mark) {
                const double w = w_of(c);
                out.force_trace.push_back(ForceState{n1u, -p_dem(w), n2_of(w),
                                                     contact.mu_surface * n2_of(w), a, w});
                next_trace_mark -= 0.5;
            }
        }
    }

    const double w_final = w_of(c);
    const double n_grip = p_dem(w_final);
    const bool pinched = delivered && w_final >= w_need;
    const bool held = pinched && hold_check(w_final, n_grip, sheet, contact);

    out.success = held;
    if (held) {
        out.failure_mode = FailureMode::none;
    } else if (!pinched) {
        out.failure_mode =
            (slipped && !delivered) ? FailureMode::tip_slip : FailureMode::no_buckle;
    } else {
        out.failure_mode = FailureMode::hold_failure;
    }
    out.closure_used_mm = delivered ? scn.close_by_mm : 0.0;
    out.springback_contribution_mm =
        scn.mode == Mode::hybrid
            ? 2.0 * (extension(alpha_settled, geom) - extension(alpha_final, geom))
            : 0.0;
    if (record_trace) {
        // Final retention state: carrying half the weight per pad on success, the
        // short capacity when pinched but too weak, and no pull at all when the
        // sheet never made it into the pad gap.
        double ff1_hold = 0.0;
        if (held)
            ff1_hold = -0.5 * sheet.weight_n();
        else if (pinched)
            ff1_hold = -std::min(contact.mu_tip * n_grip, 0.5 * sheet.weight_n());
        out.force_trace.push_back(
            ForceState{n_grip, ff1_hold, n2_of(w_final),
                       std::min(contact.mu_surface * n2_of(w_final),
                                contact.mu_tip * n_grip),
                       alpha_final, w_final});
    }
    return out;
}

TrialOutcome run_trial(const GraspScenario& scn, const FingertipGeometry& geom,
                       const JointStiffnessModel& model, const ContactParams& contact,
                       bool record_trace) {
    const ForceState pressed = press_phase(scn, geom, model, contact);
    return close_phase(pressed, scn, geom, model, contact, record_trace);
}

double min_closure_for_success(const GraspScenario& scn, const FingertipGeometry& geom,
                               const JointStiffnessModel& model,
                               const ContactParams& contact) {
    scn.validate(geom);
    const auto succeeds = [&](double close_by) {
        GraspScenario s = scn;
        s.close_by_mm = close_by;
        return run_trial(s, geom, model, contact, false).success;
    };
    const double c_max = scn.d_f0_mm;
    if (!succeeds(c_max))
        throw InfeasibleError("min_closure_for_success: no success within finger travel (" +
                              std::to_string(c_max) + " mm)");
    double lo = 0.0, hi = c_max;
    if (succeeds(0.0)) return 0.0;
    while (hi - lo > 0.005) {
        const double m = 0.5 * (lo + hi);
        (succeeds(m) ? hi : lo) = m;
    }
    return hi;
}

TrialOutcome grasp_rigid_object(const RigidObjectSpec& object, double pressure_kpa,
                                const FingertipGeometry& geom,
                                const JointStiffnessModel& model,
                                const ContactParams& contact, double alpha_contact_deg) {
    object.validate();
    contact.validate();
    geom.validate();
    if (!(pressure_kpa >= 0.0)) throw DomainError("grasp_rigid_object: pressure must be >= 0");
    if (!(alpha_contact_deg >= 0.0 && alpha_contact_deg <= geom.alpha_max))
        throw DomainError("grasp_rigid_object: alpha_contact outside [0, alpha_max]");
    const double lever = geom.d1 * cos_deg(geom.beta + alpha_contact_deg);
    if (!(lever > 1e-9))
        throw DomainError("grasp_rigid_object: pad vertical at alpha_contact, no squeeze lever");
    const double n_grip = ring_torque(model, alpha_contact_deg, pressure_kpa) / lever;
    const double mu = object.contact_mu_override.value_or(contact.mu_tip);
    const double weight = object.mass_kg * kGravity;
    const double capacity = 2.0 * mu * object.edge_factor * n_grip;

    TrialOutcome out;
    out.success = capacity >= weight;
    out.failure_mode = out.success ? FailureMode::none : FailureMode::hold_failure;
    out.closure_used_mm = 0.0;
    out.springback_contribution_mm = 0.0;
    const double ff1 = out.success ? -0.5 * weight : -0.5 * capacity;
    out.force_trace.push_back(
        ForceState{n_grip, ff1, 0.0, 0.0, alpha_contact_deg, 0.0});
    return out;
}

} // namespace gripsim
