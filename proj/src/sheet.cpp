#include "gripsim/sheet.hpp"

#include <cmath>

#include "gripsim/errors.hpp"
#include "gripsim/units.hpp"

namespace gripsim {

void SheetSpec::validate() const {
    if (!(elastic_modulus_pa >= 0.0)) throw DomainError("sheet: elastic modulus must be >= 0");
    if (!(thickness_mm > 0.0)) throw DomainError("sheet: thickness must be > 0");
    if (!(width_mm > 0.0)) throw DomainError("sheet: width must be > 0");
    if (!(length_mm > 0.0)) throw DomainError("sheet: length must be > 0");
    if (!(areal_density_kg_m2 >= 0.0)) throw DomainError("sheet: areal density must be >= 0");
    if (!(initial_deflection_mm >= 0.0))
        throw DomainError("sheet: initial deflection must be >= 0");
    if (!(thickness_mm <= length_mm / 20.0))
        throw DomainError("sheet: thickness must be <= length/20 (thin-sheet assumption)");
}

double SheetSpec::mass_kg() const {
    return areal_density_kg_m2 * mm_to_m(width_mm) * mm_to_m(length_mm);
}

double SheetSpec::weight_n() const { return mass_kg() * kGravity; }

double bending_stiffness(const SheetSpec& spec) {
    spec.validate();
    const double t = mm_to_m(spec.thickness_mm);
    return spec.elastic_modulus_pa * t * t * t / 12.0;
}

double moment_for_curvature(double s_b_nm, double width_b_mm, double radius_r_mm) {
    if (!(radius_r_mm > 0.0)) throw DomainError("moment_for_curvature: radius must be > 0");
    if (!(width_b_mm > 0.0)) throw DomainError("moment_for_curvature: width must be > 0");
    if (!(s_b_nm >= 0.0)) throw DomainError("moment_for_curvature: stiffness must be >= 0");
    return s_b_nm * mm_to_m(width_b_mm) / mm_to_m(radius_r_mm);
}

double critical_buckling_load(const SheetSpec& spec, double span_d_mm) {
    if (!(span_d_mm > 0.0)) throw DomainError("critical_buckling_load: span must be > 0");
    const double d = mm_to_m(span_d_mm);
    return kPi * kPi * bending_stiffness(spec) * mm_to_m(spec.width_mm) / (d * d);
}

double buckle_amplitude(double span_d_mm, double end_shortening_c_mm) {
    if (!(span_d_mm > 0.0)) throw DomainError("buckle_amplitude: span must be > 0");
    if (!(end_shortening_c_mm >= 0.0))
        throw DomainError("buckle_amplitude: shortening must be >= 0");
    if (!(end_shortening_c_mm < span_d_mm))
        throw DomainError("buckle_amplitude: shortening must be < span");
    return (2.0 / kPi) * std::sqrt(span_d_mm * end_shortening_c_mm);
}

double imperfection_knockdown(const SheetSpec& spec) {
    spec.validate();
    return std::max(0.0, 1.0 - 0.1 * spec.initial_deflection_mm / spec.thickness_mm);
}

} // namespace gripsim
