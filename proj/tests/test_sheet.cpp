#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gripsim/errors.hpp"
#include "gripsim/sheet.hpp"

using namespace gripsim;

namespace {
const SheetSpec kDefault{};
}

TEST_CASE("bending stiffness: pinned value and scaling laws") {
    CHECK(bending_stiffness(kDefault) == doctest::Approx(2.0833333333333333e-2).epsilon(1e-13));

    SheetSpec doubled = kDefault;
    doubled.thickness_mm = 1.0;
    CHECK(bending_stiffness(doubled) ==
          doctest::Approx(8.0 * bending_stiffness(kDefault)).epsilon(1e-12));

    SheetSpec zero = kDefault;
    zero.elastic_modulus_pa = 0.0;
    CHECK(bending_stiffness(zero) == 0.0);

    SheetSpec half_e = kDefault;
    half_e.elastic_modulus_pa = 1e9;
    CHECK(bending_stiffness(half_e) ==
          doctest::Approx(0.5 * bending_stiffness(kDefault)).epsilon(1e-13));
}

TEST_CASE("moment for curvature: pinned value, flat limit, linearity") {
    const double sb = 2.0833333333333333e-2;
    CHECK(moment_for_curvature(sb, 48.0, 100.0) == doctest::Approx(1.0e-2).epsilon(1e-12));
    CHECK(moment_for_curvature(sb, 48.0, 1e9) <= 1e-9 * (1.0 + 1e-9));
    CHECK(moment_for_curvature(sb, 96.0, 100.0) ==
          doctest::Approx(2.0 * moment_for_curvature(sb, 48.0, 100.0)).epsilon(1e-13));
    CHECK_THROWS_AS(moment_for_curvature(sb, 48.0, 0.0), DomainError);
}

TEST_CASE("critical buckling load: pinned value and scaling") {
    CHECK(critical_buckling_load(kDefault, 65.0) ==
          doctest::Approx(2.3360010416779547).epsilon(1e-12));
    CHECK(critical_buckling_load(kDefault, 130.0) ==
          doctest::Approx(0.25 * critical_buckling_load(kDefault, 65.0)).epsilon(1e-12));
    SheetSpec wide = kDefault;
    wide.width_mm = 96.0;
    CHECK(critical_buckling_load(wide, 65.0) ==
          doctest::Approx(2.0 * critical_buckling_load(kDefault, 65.0)).epsilon(1e-12));
    // P_cr * d^2 constant over span
    const double k = critical_buckling_load(kDefault, 40.0) * 40.0 * 40.0;
    for (double d : {20.0, 55.0, 65.0, 81.2, 120.0}) {
        CHECK(critical_buckling_load(kDefault, d) * d * d ==
              doctest::Approx(k).epsilon(1e-12));
    }
    CHECK_THROWS_AS(critical_buckling_load(kDefault, 0.0), DomainError);
}

TEST_CASE("buckle amplitude: pinned values and sqrt scaling") {
    CHECK(buckle_amplitude(65.0, 0.0) == 0.0);
    CHECK(buckle_amplitude(65.0, 5.0) == doctest::Approx(11.4768261612276372).epsilon(1e-13));
    CHECK(buckle_amplitude(65.0, 20.0) == doctest::Approx(22.9536523224552744).epsilon(1e-13));
    CHECK(buckle_amplitude(65.0, 20.0) ==
          doctest::Approx(2.0 * buckle_amplitude(65.0, 5.0)).epsilon(1e-14));
    for (double c : {0.3, 1.7, 9.1}) {
        CHECK(buckle_amplitude(81.0, 4.0 * c) ==
              doctest::Approx(2.0 * buckle_amplitude(81.0, c)).epsilon(1e-14));
    }
    double prev = -1.0;
    for (double c = 0.0; c < 30.0; c += 0.5) {
        const double w = buckle_amplitude(65.0, c);
        CHECK(w > prev);
        CHECK(std::isfinite(w));
        prev = w;
    }
    CHECK_THROWS_AS(buckle_amplitude(65.0, 65.0), DomainError);
    CHECK_THROWS_AS(buckle_amplitude(65.0, -1.0), DomainError);
}

TEST_CASE("sheet mass, weight, knockdown") {
    CHECK(kDefault.mass_kg() == doctest::Approx(8.064e-4).epsilon(1e-12));
    CHECK(kDefault.weight_n() == doctest::Approx(7.910784e-3).epsilon(1e-12));
    CHECK(imperfection_knockdown(kDefault) == doctest::Approx(0.89).epsilon(1e-12));
    SheetSpec flat = kDefault;
    flat.initial_deflection_mm = 0.0;
    CHECK(imperfection_knockdown(flat) == 1.0);
    SheetSpec bumpy = kDefault;
    bumpy.initial_deflection_mm = 6.0; // 12 thicknesses: knockdown floors at 0
    CHECK(imperfection_knockdown(bumpy) == 0.0);
}

TEST_CASE("sheet validation") {
    SheetSpec bad = kDefault;
    bad.thickness_mm = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = kDefault;
    bad.thickness_mm = 20.0; // length/20 = 10.5 < 20
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = kDefault;
    bad.initial_deflection_mm = -0.1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
