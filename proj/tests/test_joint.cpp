#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gripsim/errors.hpp"
#include "gripsim/joint.hpp"
#include "gripsim/units.hpp"

using namespace gripsim;

TEST_CASE("torque from forces: pinned values") {
    CHECK(torque_from_forces(0.0, 1.0, 30.0, 50.0) == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(torque_from_forces(1.0, 0.0, 0.0, 50.0) == -50.0); // exact: cos 0 = 1, sin 0 = 0
    CHECK(torque_from_forces(0.5, 2.0, 45.0, 50.0) ==
          doctest::Approx(53.0330085889910643).epsilon(1e-14));
}

TEST_CASE("torque from forces: sign zeros and superposition") {
    CHECK(torque_from_forces(0.0, 3.7, 0.0, 50.0) == 0.0);  // F_z only at alpha=0
    CHECK(torque_from_forces(2.9, 0.0, 90.0, 50.0) == 0.0); // F_y only at alpha=90
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        const double fy1 = u(rng), fz1 = u(rng), fy2 = u(rng), fz2 = u(rng);
        const double a = std::uniform_real_distribution<double>(0.0, 90.0)(rng);
        const double lhs = torque_from_forces(fy1 + fy2, fz1 + fz2, a, 50.0);
        const double rhs =
            torque_from_forces(fy1, fz1, a, 50.0) + torque_from_forces(fy2, fz2, a, 50.0);
        CHECK(lhs == doctest::Approx(rhs).scale(500.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(torque_from_forces(0, 0, 91.0, 50.0), DomainError);
}

TEST_CASE("ingestion: identical rows average to the single-row torque") {
    std::vector<CalRow> rows(10, CalRow{45.0, 100.0, -0.2, 1.0});
    const auto grid = ingest_calibration_log(rows);
    REQUIRE(grid.alphas.size() == 1);
    REQUIRE(grid.pressures.size() == 1);
    CHECK(grid.trials_per_cell == 10);
    CHECK(grid.at(0, 0) ==
          doctest::Approx(torque_from_forces(-0.2, 1.0, 45.0, 50.0)).epsilon(1e-15));
}

TEST_CASE("ingestion: 2x2 shape and exact cell means") {
    // At alpha=0 torque reduces to -fy*a1 exactly, so means are exact arithmetic.
    std::vector<CalRow> rows = {
        {0.0, 0.0, -0.2, 0.0},  {0.0, 0.0, -0.4, 0.0},  // cell (0,0): tau 10, 20
        {0.0, 50.0, -0.6, 0.0},                         // cell (0,50): tau 30
        {40.0, 0.0, 0.0, 1.0},                          // cell (40,0)
        {40.0, 50.0, 0.0, 2.0},                         // cell (40,50)
    };
    const auto grid = ingest_calibration_log(rows);
    REQUIRE(grid.alphas == std::vector<double>({0.0, 40.0}));
    REQUIRE(grid.pressures == std::vector<double>({0.0, 50.0}));
    CHECK(grid.at(0, 0) == 15.0); // mean of {10, 20}
    CHECK(grid.at(0, 1) == 30.0);
    CHECK(grid.trials_per_cell == 1);
}

TEST_CASE("ingestion errors: holes and negative means name the cell") {
    std::vector<CalRow> hole = {{0.0, 0.0, -0.2, 0.0}, {0.0, 10.0, -0.2, 0.0},
                                {5.0, 0.0, -0.2, 0.0}};
    CHECK_THROWS_WITH_AS(ingest_calibration_log(hole),
                         doctest::Contains("empty cell (alpha=5"), IngestError);
    std::vector<CalRow> neg = {{0.0, 0.0, 0.5, 0.0}}; // tau = -25
    CHECK_THROWS_WITH_AS(ingest_calibration_log(neg), doctest::Contains("negative mean"),
                         IngestError);
    CHECK_THROWS_AS(ingest_calibration_log({}), IngestError);
    std::vector<CalRow> out_of_range = {{85.0, 0.0, -0.2, 0.0}};
    CHECK_THROWS_AS(ingest_calibration_log(out_of_range), IngestError);
}

TEST_CASE("calibration CSV parsing") {
    const std::string good = "alpha_deg,pressure_kpa,fy_n,fz_n\n45,100,-0.2,1.0\n45,100,-0.2,1.0\n";
    const auto rows = parse_calibration_csv_text(good);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].alpha_deg == 45.0);
    CHECK(rows[0].f_y_n == -0.2);

    try {
        parse_calibration_csv_text("alpha_deg,pressure_kpa,fy_n,fz_n\n45,100,-0.2,1.0\n45,100,x,1.0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_calibration_csv_text("alpha_deg,pressure_kpa,fy_n,fz_n\n1,2,3\n"),
                    ParseError);
    CHECK_THROWS_WITH_AS(parse_calibration_csv_text(""), doctest::Contains("no rows"),
                         ParseError);
    CHECK_THROWS_AS(parse_calibration_csv_text("wrong,header,row,here\n"), ParseError);
}

TEST_CASE("grid interpolation: node identity, cell centers, bounds") {
    JointCalibrationGrid g;
    g.alphas = {10.0, 20.0};
    g.pressures = {0.0, 100.0};
    g.trials_per_cell = 1;

    g.torques = {10.0, 10.0, 20.0, 20.0}; // varies along alpha only
    CHECK(ring_torque_grid(g, 15.0, 50.0) == doctest::Approx(15.0).epsilon(1e-14));
    g.torques = {0.0, 10.0, 20.0, 30.0};
    CHECK(ring_torque_grid(g, 15.0, 50.0) == doctest::Approx(15.0).epsilon(1e-14));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(ring_torque_grid(g, g.alphas[i], g.pressures[j]) == g.at(i, j));
    CHECK_THROWS_AS(ring_torque_grid(g, 9.9, 50.0), DomainError);
    CHECK_THROWS_AS(ring_torque_grid(g, 15.0, 101.0), DomainError);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        JointCalibrationGrid r;
        r.alphas = {0.0, 10.0 + 30.0 * u01(rng), 80.0};
        r.pressures = {0.0, 20.0 + 60.0 * u01(rng), 150.0};
        r.trials_per_cell = 1;
        for (int k = 0; k < 9; ++k) r.torques.push_back(600.0 * u01(rng));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(ring_torque_grid(r, r.alphas[i], r.pressures[j]) ==
                      doctest::Approx(r.at(i, j)).scale(600.0).epsilon(1e-14));
        // interior queries bounded by the surrounding cell's corner min/max
        const double qa = r.alphas[1] * (0.3 + 0.4 * u01(rng));
        const double qp = r.pressures[1] * (0.3 + 0.4 * u01(rng));
        const double v = ring_torque_grid(r, qa, qp);
        double lo = 1e300, hi = -1e300;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                lo = std::min(lo, r.at(i, j));
                hi = std::max(hi, r.at(i, j));
            }
        CHECK(v >= lo - 1e-9);
        CHECK(v <= hi + 1e-9);
    }
}

namespace {
JointCalibrationGrid synthetic_grid(double k0, double k1, double noise_half_width,
                                    unsigned noise_seed) {
    JointCalibrationGrid g;
    for (int a = 0; a <= 80; a += 10) g.alphas.push_back(a);
    for (int p = 0; p <= 150; p += 30) g.pressures.push_back(p);
    g.trials_per_cell = 10;
    std::mt19937_64 rng(noise_seed);
    std::uniform_real_distribution<double> eps(-noise_half_width, noise_half_width);
    for (double a : g.alphas)
        for (double p : g.pressures) {
            double t = (k0 + k1 * p) * deg2rad(a);
            if (noise_half_width > 0.0) t = std::max(0.0, t + eps(rng));
            g.torques.push_back(t);
        }
    return g;
}
} // namespace

TEST_CASE("model fit: exact recovery, degenerate grid, noisy recovery") {
    const auto m = fit_model(synthetic_grid(200.0, 4.0, 0.0, 0));
    CHECK(m.k0 == doctest::Approx(200.0).epsilon(1e-9));
    CHECK(m.k1 == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(m.residual_rmse < 1e-9);
    CHECK_FALSE(m.degenerate);

    const auto z = fit_model(synthetic_grid(0.0, 0.0, 0.0, 0));
    CHECK(z.k0 == 0.0);
    CHECK(z.k1 == 0.0);
    CHECK(z.residual_rmse == 0.0);
    CHECK(z.degenerate);

    const auto n = fit_model(synthetic_grid(200.0, 4.0, 5.0, 1234));
    CHECK(n.k0 == doctest::Approx(200.0).epsilon(0.05));
    CHECK(n.k1 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(n.residual_rmse > 0.0);
    CHECK(n.residual_rmse < 10.0);
}

TEST_CASE("model fit: nonnegativity clamp") {
    // Torque decreasing in pressure would want k1 < 0; the fit must clamp.
    JointCalibrationGrid g;
    g.alphas = {20.0, 60.0};
    g.pressures = {0.0, 100.0};
    g.trials_per_cell = 1;
    g.torques = {200.0, 50.0, 600.0, 150.0};
    const auto m = fit_model(g);
    CHECK(m.k0 >= 0.0);
    CHECK(m.k1 >= 0.0);
    CHECK(m.k1 == 0.0);
}

TEST_CASE("ring torque model: pinned values and monotonicity") {
    JointStiffnessModel m{200.0, 4.0, 0.0, "test", false};
    CHECK(ring_torque(m, 0.0, 123.0) == 0.0);
    CHECK(ring_torque(m, 45.0, 100.0) == doctest::Approx(471.2388980384690).epsilon(1e-13));
    CHECK(ring_torque(m, 45.0, 0.0) == doctest::Approx(157.0796326794897).epsilon(1e-13));
    double prev = -1.0;
    for (int a = 0; a <= 80; ++a) {
        const double t = ring_torque(m, a, 75.0);
        CHECK(t >= prev);
        prev = t;
    }
    prev = -1.0;
    for (int p = 0; p <= 150; ++p) {
        const double t = ring_torque(m, 33.0, p);
        CHECK(t >= prev);
        prev = t;
    }
}

TEST_CASE("required pressure: inverse and infeasibility") {
    JointStiffnessModel m{200.0, 4.0, 0.0, "test", false};
    CHECK(required_pressure(m, 45.0, ring_torque(m, 45.0, 0.0)) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(required_pressure(m, 45.0, 471.2388980384690) == doctest::Approx(100.0).epsilon(1e-9));
    for (double p : {0.0, 13.7, 55.0, 149.9}) {
        CHECK(required_pressure(m, 61.3, ring_torque(m, 61.3, p)) ==
              doctest::Approx(p).scale(150.0).epsilon(1e-11));
    }
    JointStiffnessModel flat{200.0, 0.0, 0.0, "test", false};
    CHECK_THROWS_AS(required_pressure(flat, 45.0, 400.0), InfeasibleError);
    CHECK_THROWS_AS(required_pressure(m, 45.0, 10.0), InfeasibleError); // below baseline
    CHECK_THROWS_AS(required_pressure(m, 0.0, 10.0), DomainError);
}

TEST_CASE("factory calibration: shape and fit roundtrip") {
    const auto g = default_calibration_grid();
    CHECK(g.alphas.size() == 17);
    CHECK(g.pressures.size() == 16);
    CHECK(g.torques.size() == 272);
    const auto m = default_model();
    CHECK(m.k0 == doctest::Approx(kDefaultK0).epsilon(1e-9));
    CHECK(m.k1 == doctest::Approx(kDefaultK1).epsilon(1e-9));
    // Round-trip of an exactly separable grid: residual is numerical noise
    // only (torques reach ~4e3 N*mm, so 1e-3 is ~2e-7 relative).
    CHECK(m.residual_rmse < 1e-3);
}
