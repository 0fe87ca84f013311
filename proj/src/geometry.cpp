#include "gripsim/geometry.hpp"

#include <cmath>
#include <string>

#include "gripsim/errors.hpp"
#include "gripsim/units.hpp"

namespace gripsim {

namespace {

void check_alpha(double alpha_deg, const FingertipGeometry& geom, const char* op) {
    if (!(alpha_deg >= 0.0 && alpha_deg <= geom.alpha_max)) {
        throw DomainError(std::string(op) + ": alpha " + std::to_string(alpha_deg) +
                          " deg outside [0, " + std::to_string(geom.alpha_max) + "]");
    }
}

} // namespace

void FingertipGeometry::validate() const {
    if (!(r_c > 0.0)) throw DomainError("geometry: r_c must be > 0");
    if (!(d1 > 0.0)) throw DomainError("geometry: d1 must be > 0");
    if (!(a1 > 0.0)) throw DomainError("geometry: a1 must be > 0");
    if (!(beta >= 0.0 && beta < 90.0)) throw DomainError("geometry: beta must be in [0, 90)");
    if (!(alpha_max > 0.0 && alpha_max <= 80.0))
        throw DomainError("geometry: alpha_max must be in (0, 80]");
    if (!(beta + alpha_max <= 110.0))
        throw DomainError("geometry: beta + alpha_max must not exceed 110 deg");
}

void FingerPose::validate(const FingertipGeometry& geom) const {
    if (!(alpha >= 0.0 && alpha <= geom.alpha_max))
        throw DomainError("pose: alpha outside [0, alpha_max]");
    if (!(d_f >= 0.0 && d_f <= 100.0)) throw DomainError("pose: d_f outside [0, 100] mm");
    if (!(descent >= 0.0)) throw DomainError("pose: descent must be >= 0");
}

double testing_fingertip_drop(double alpha_deg, const FingertipGeometry& geom) {
    check_alpha(alpha_deg, geom, "testing_fingertip_drop");
    return geom.a1 * (1.0 - cos_deg(alpha_deg));
}

double finger_drop(double alpha_deg, const FingertipGeometry& geom) {
    check_alpha(alpha_deg, geom, "finger_drop");
    return geom.d1 * (cos_deg(geom.beta) - cos_deg(geom.beta + alpha_deg));
}

double drop_to_angle(double h_mm, const FingertipGeometry& geom) {
    const double h_max = finger_drop(geom.alpha_max, geom);
    if (!(h_mm >= 0.0 && h_mm <= h_max)) {
        throw DomainError("drop_to_angle: h " + std::to_string(h_mm) +
                          " mm outside reachable [0, " + std::to_string(h_max) + "]");
    }
    double lo = 0.0, hi = geom.alpha_max;
    // finger_drop is strictly increasing for beta + alpha <= 110 < 180, so
    // bisection on the bracket is unconditionally convergent.
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double r = finger_drop(mid, geom) - h_mm;
        if (std::fabs(r) < 1e-12) return mid;
        (r < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-13) break;
    }
    return 0.5 * (lo + hi);
}

double extension(double alpha_deg, const FingertipGeometry& geom) {
    check_alpha(alpha_deg, geom, "extension");
    return geom.d1 * sin_deg(geom.beta + alpha_deg);
}

double contact_span(const FingerPose& pose, const FingertipGeometry& geom) {
    pose.validate(geom);
    return contact_span(pose.d_f, pose.alpha, geom);
}

double contact_span(double d_f_mm, double alpha_deg, const FingertipGeometry& geom) {
    if (!(d_f_mm >= 0.0)) throw DomainError("contact_span: d_f must be >= 0");
    return d_f_mm + 2.0 * extension(alpha_deg, geom);
}

ContactPoint contact_point(double alpha_deg, const FingertipGeometry& geom) {
    check_alpha(alpha_deg, geom, "contact_point");
    return ContactPoint{geom.d1 * sin_deg(geom.beta + alpha_deg),
                        -geom.d1 * cos_deg(geom.beta + alpha_deg)};
}

} // namespace gripsim
