#pragma once

namespace gripsim {

// Thin deformable object held between the fingers. SI-sensitive quantities
// (modulus Pa, density kg/m^2) stay SI; lengths are mm at the API boundary.
struct SheetSpec {
    double elastic_modulus_pa = 2e9;
    double thickness_mm = 0.5;
    double width_mm = 48.0;      // b, across the fingers
    double length_mm = 210.0;    // L, along the closing axis
    double areal_density_kg_m2 = 0.08;
    double initial_deflection_mm = 0.55; // delta0, mid-span rise when "flat"

    void validate() const;
    double mass_kg() const;   // areal_density * b * L
    double weight_n() const;  // mass * g
};

// Per-unit-width bending stiffness S_b = E * t^3 / 12  [N*m].
double bending_stiffness(const SheetSpec& spec);

// Moment to hold curvature radius R over width b: M = S_b * b / R  [N*m].
double moment_for_curvature(double s_b_nm, double width_b_mm, double radius_r_mm);

// Euler pinned-pinned critical compressive load of the strip spanning d
// between the two contact points: P_cr = pi^2 * S_b * b / d^2  [N].
double critical_buckling_load(const SheetSpec& spec, double span_d_mm);

// First-mode rise of an inextensible strip under end-shortening c:
// w = (2/pi) * sqrt(d * c)  [mm].
double buckle_amplitude(double span_d_mm, double end_shortening_c_mm);

// Imperfection sensitivity: the effective critical load is scaled by
// max(0, 1 - 0.1 * delta0 / t). A taller initial bump buckles earlier.
double imperfection_knockdown(const SheetSpec& spec);

} // namespace gripsim
