#pragma once

namespace gripsim {

// Rigid-link constants of one finger: curved fingertip of arc radius r_c whose
// contact pole sits at distance d1 from the distal revolute joint, offset by the
// built-in angle beta; a straight testing fingertip of lever a1 is used on the
// torque rig. Lengths mm, angles degrees.
struct FingertipGeometry {
    double r_c = 20.0;
    double d1 = 31.0;
    double beta = 20.64;
    double alpha_max = 80.0;
    double a1 = 50.0;

    void validate() const; // throws DomainError on violated invariants
};

// One finger's configuration: backward bend alpha of the distal joint, the
// separation d_f between the two finger bodies, and gripper-frame descent.
struct FingerPose {
    double alpha = 0.0;
    double d_f = 30.0;
    double descent = 0.0;

    void validate(const FingertipGeometry& geom) const;
};

struct ContactPoint {
    double y; // horizontal offset from the joint, mm
    double z; // vertical offset from the joint, mm (negative = below)
};

// Vertical drop of the straight testing fingertip's end: a1 * (1 - cos alpha).
double testing_fingertip_drop(double alpha_deg, const FingertipGeometry& geom);

// Vertical drop of the working fingertip's contact point when the joint bends
// back by alpha: d1 * (cos beta - cos(beta + alpha)).
double finger_drop(double alpha_deg, const FingertipGeometry& geom);

// Inverse of finger_drop by bisection on [0, alpha_max]; |residual| < 1e-9 mm.
double drop_to_angle(double h_mm, const FingertipGeometry& geom);

// Horizontal reach of the contact point from the joint: d1 * sin(beta + alpha).
double extension(double alpha_deg, const FingertipGeometry& geom);

// Distance between the two fingers' contact points: d_f + 2 * extension(alpha).
double contact_span(const FingerPose& pose, const FingertipGeometry& geom);
double contact_span(double d_f_mm, double alpha_deg, const FingertipGeometry& geom);

// 2D contact location relative to the joint: (d1 sin(beta+alpha), -d1 cos(beta+alpha)).
ContactPoint contact_point(double alpha_deg, const FingertipGeometry& geom);

} // namespace gripsim
