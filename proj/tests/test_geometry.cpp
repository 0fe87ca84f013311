#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gripsim/errors.hpp"
#include "gripsim/geometry.hpp"
#include "gripsim/units.hpp"

using namespace gripsim;

namespace {
const FingertipGeometry kDefault{};

// Brute-force long-double evaluation kept deliberately independent of the
// library implementation (plain <cmath>, radian conversion spelled out).
long double ld_drop_testing(long double a_deg, long double a1) {
    const long double rad = a_deg * 3.14159265358979323846264338327950288L / 180.0L;
    return a1 * (1.0L - std::cos(rad));
}
long double ld_drop_finger(long double a_deg, long double d1, long double beta) {
    const long double c = 3.14159265358979323846264338327950288L / 180.0L;
    return d1 * (std::cos(beta * c) - std::cos((beta + a_deg) * c));
}
long double ld_extension(long double a_deg, long double d1, long double beta) {
    const long double c = 3.14159265358979323846264338327950288L / 180.0L;
    return d1 * std::sin((beta + a_deg) * c);
}
} // namespace

TEST_CASE("testing fingertip drop: pinned values") {
    CHECK(testing_fingertip_drop(0.0, kDefault) == 0.0);
    CHECK(testing_fingertip_drop(60.0, kDefault) == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(testing_fingertip_drop(45.0, kDefault) ==
          doctest::Approx(14.6446609406726238).epsilon(1e-13));
}

TEST_CASE("finger drop: pinned values") {
    CHECK(finger_drop(0.0, kDefault) == 0.0);
    CHECK(finger_drop(45.0, kDefault) == doctest::Approx(16.2236988367569032).epsilon(1e-13));
    CHECK(finger_drop(65.0, kDefault) == doctest::Approx(26.6535129550284153).epsilon(1e-13));
}

TEST_CASE("drop_to_angle: inverse of finger_drop") {
    CHECK(drop_to_angle(0.0, kDefault) == doctest::Approx(0.0).epsilon(1e-9));
    const double h45 = finger_drop(45.0, kDefault);
    CHECK(drop_to_angle(h45, kDefault) == doctest::Approx(45.0).epsilon(1e-8));
    CHECK(drop_to_angle(26.6535129550284153, kDefault) == doctest::Approx(65.0).epsilon(1e-8));
    CHECK_THROWS_AS(drop_to_angle(-0.1, kDefault), DomainError);
    CHECK_THROWS_AS(drop_to_angle(1e3, kDefault), DomainError);
}

TEST_CASE("extension: pinned values") {
    CHECK(extension(0.0, kDefault) == doctest::Approx(10.9273467188160339).epsilon(1e-13));
    const double a_vertical = 90.0 - kDefault.beta;
    CHECK(extension(a_vertical, kDefault) == doctest::Approx(31.0).epsilon(1e-12));
    CHECK(extension(45.0, kDefault) == doctest::Approx(28.2401270447390877).epsilon(1e-13));
}

TEST_CASE("contact span: pinned values") {
    CHECK(contact_span(30.0, 0.0, kDefault) ==
          doctest::Approx(51.8546934376320677).epsilon(1e-13));
    CHECK(contact_span(8.5, 45.0, kDefault) ==
          doctest::Approx(64.9802540894781755).epsilon(1e-13));
    CHECK(contact_span(0.0, 90.0 - kDefault.beta, kDefault) ==
          doctest::Approx(62.0).epsilon(1e-12));
}

TEST_CASE("contact point: pinned values and identity with extension") {
    const auto p0 = contact_point(0.0, kDefault);
    CHECK(p0.y == doctest::Approx(31.0 * sin_deg(20.64)).epsilon(1e-15));
    CHECK(p0.z == doctest::Approx(-31.0 * cos_deg(20.64)).epsilon(1e-15));
    const auto pv = contact_point(90.0 - kDefault.beta, kDefault);
    CHECK(pv.y == doctest::Approx(31.0).epsilon(1e-12));
    CHECK(pv.z == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    const auto p65 = contact_point(65.0, kDefault);
    CHECK(p65.y == doctest::Approx(30.9102881462062497).epsilon(1e-13));
    CHECK(p65.z == doctest::Approx(-2.3567109959648011).epsilon(1e-12));
    for (double a : {0.0, 12.5, 33.0, 45.0, 65.0, 80.0}) {
        CHECK(contact_point(a, kDefault).y == extension(a, kDefault)); // bitwise
    }
}

TEST_CASE("kinematics agree with independent brute-force evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        FingertipGeometry g;
        g.d1 = 5.0 + 60.0 * u01(rng);
        g.a1 = 5.0 + 80.0 * u01(rng);
        g.beta = 80.0 * u01(rng);
        g.alpha_max = std::min(80.0, 110.0 - g.beta) * (0.2 + 0.8 * u01(rng));
        g.validate();
        const double a = g.alpha_max * u01(rng);
        const double rel = 1e-12;
        CHECK(testing_fingertip_drop(a, g) ==
              doctest::Approx((double)ld_drop_testing(a, g.a1)).epsilon(rel).scale(g.a1));
        CHECK(finger_drop(a, g) ==
              doctest::Approx((double)ld_drop_finger(a, g.d1, g.beta)).epsilon(rel).scale(g.d1));
        CHECK(extension(a, g) ==
              doctest::Approx((double)ld_extension(a, g.d1, g.beta)).epsilon(rel).scale(g.d1));
        const double df = 100.0 * u01(rng);
        CHECK(contact_span(df, a, g) ==
              doctest::Approx(df + 2.0 * (double)ld_extension(a, g.d1, g.beta))
                  .epsilon(rel)
                  .scale(g.d1 + df));
    }
}

TEST_CASE("roundtrip drop_to_angle(finger_drop(alpha)) within 1e-6 deg") {
    for (int i = 0; i <= 160; ++i) {
        const double a = kDefault.alpha_max * i / 160.0;
        CHECK(drop_to_angle(finger_drop(a, kDefault), kDefault) ==
              doctest::Approx(a).scale(1.0).epsilon(1e-6));
    }
}

TEST_CASE("monotonicity on (0, 90 - beta)") {
    const double a_cap = 90.0 - kDefault.beta;
    double prev_t = -1.0, prev_f = -1.0, prev_e = -1.0;
    for (int i = 1; i <= 100; ++i) {
        const double a = a_cap * i / 101.0;
        const double t = testing_fingertip_drop(a, kDefault);
        const double f = finger_drop(a, kDefault);
        const double e = extension(a, kDefault);
        CHECK(t > prev_t);
        CHECK(f > prev_f);
        CHECK(e > prev_e);
        prev_t = t;
        prev_f = f;
        prev_e = e;
    }
}

TEST_CASE("span identity and finiteness") {
    for (double a : {0.0, 5.0, 21.4, 45.0, 63.1, 80.0}) {
        for (double df : {0.0, 8.5, 30.0, 65.0, 100.0}) {
            const double lhs = contact_span(df, a, kDefault) - contact_span(df, 0.0, kDefault);
            const double rhs = 2.0 * (extension(a, kDefault) - extension(0.0, kDefault));
            CHECK(lhs == doctest::Approx(rhs).scale(62.0).epsilon(1e-14));
            CHECK(std::isfinite(contact_span(df, a, kDefault)));
        }
        CHECK(std::isfinite(finger_drop(a, kDefault)));
        CHECK(std::isfinite(contact_point(a, kDefault).z));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(testing_fingertip_drop(-1.0, kDefault), DomainError);
    CHECK_THROWS_AS(finger_drop(80.5, kDefault), DomainError);
    CHECK_THROWS_AS(extension(81.0, kDefault), DomainError);
    FingertipGeometry bad = kDefault;
    bad.d1 = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = kDefault;
    bad.beta = 40.0; // beta + alpha_max = 120 > 110
    CHECK_THROWS_AS(bad.validate(), DomainError);
    FingerPose p{-1.0, 30.0, 0.0};
    CHECK_THROWS_AS(p.validate(kDefault), DomainError);
}
