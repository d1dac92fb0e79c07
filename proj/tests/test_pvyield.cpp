#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "coolgrid/pvyield.hpp"

using namespace coolgrid;

TEST_CASE("solar_position") {
    SUBCASE("equator, equinox, solar noon is near-vertical") {
        const int h = 79 * 24 + 12; // day 80
        const auto pos = solar_position(0.0, 0.0, h);
        CHECK(pos.zenith_deg < 1.5);
    }
    SUBCASE("winter midnight puts the sun below the horizon") {
        const auto pos = solar_position(45.0, 0.0, 10 * 24 + 0);
        CHECK(pos.zenith_deg > 90.0);
    }
    SUBCASE("lat 45 summer-solstice noon matches declination arithmetic") {
        const int h = 171 * 24 + 12; // day 172
        const auto pos = solar_position(45.0, 0.0, h);
        CHECK(pos.zenith_deg == doctest::Approx(45.0 - 23.44).epsilon(0.025));
    }
    SUBCASE("extraterrestrial irradiance stays in the eccentricity band") {
        for (int h = 0; h < kHoursPerYear; h += 240) {
            const auto pos = solar_position(10.0, 0.0, h);
            CHECK(pos.extraterrestrial_normal >= 1320.0);
            CHECK(pos.extraterrestrial_normal <= 1420.0);
        }
    }
    SUBCASE("morning sun is east of south at northern mid-latitude") {
        const auto pos = solar_position(45.0, 0.0, 171 * 24 + 8);
        CHECK(pos.azimuth_deg < 180.0);
        const auto pm = solar_position(45.0, 0.0, 171 * 24 + 16);
        CHECK(pm.azimuth_deg > 180.0);
    }
}

TEST_CASE("disc_dni") {
    SolarPosition pos;
    pos.extraterrestrial_normal = 1367.0;

    SUBCASE("zero GHI gives zero DNI") {
        pos.zenith_deg = 30.0;
        CHECK(disc_dni(0.0, pos, 101325.0) == 0.0);
    }
    SUBCASE("horizon cutoff at 87 degrees") {
        pos.zenith_deg = 88.0;
        CHECK(disc_dni(500.0, pos, 101325.0) == 0.0);
    }
    SUBCASE("matches the independently evaluated correlation") {
        // Frozen from a scratch implementation of the quasi-physical
        // correlation evaluated at these exact inputs.
        pos.zenith_deg = 30.0;
        CHECK(disc_dni(700.0, pos, 101325.0) == doctest::Approx(340.386144).epsilon(1e-6));
        pos.zenith_deg = 60.0;
        CHECK(disc_dni(400.0, pos, 101325.0) == doctest::Approx(462.085234).epsilon(1e-6));
    }
    SUBCASE("bounded by extraterrestrial irradiance") {
        for (double z : {0.0, 20.0, 50.0, 80.0}) {
            pos.zenith_deg = z;
            for (double ghi : {50.0, 300.0, 700.0, 1100.0}) {
                const double dni = disc_dni(ghi, pos, 101325.0);
                CHECK(dni >= 0.0);
                CHECK(dni <= pos.extraterrestrial_normal);
            }
        }
    }
}

TEST_CASE("poa_irradiance") {
    PvConfig cfg;
    SolarPosition pos;
    pos.zenith_deg = 40.0;
    pos.azimuth_deg = 180.0;

    SUBCASE("tilt 0 reproduces GHI exactly") {
        // Consistent inputs need ghi >= dni * cos(zenith) so dhi stays >= 0.
        for (double ghi : {240.0, 300.0, 600.0, 1000.0})
            CHECK(poa_irradiance(ghi, 300.0, pos, 0.0, 180.0, cfg) ==
                  doctest::Approx(ghi).epsilon(1e-12));
        for (double ghi : {0.0, 123.4})
            CHECK(poa_irradiance(ghi, 0.0, pos, 0.0, 180.0, cfg) ==
                  doctest::Approx(ghi).epsilon(1e-12));
    }
    SUBCASE("vertical panel with no beam and no albedo sees half the diffuse") {
        PvConfig dark = cfg;
        dark.albedo = 0.0;
        const double poa = poa_irradiance(400.0, 0.0, pos, 90.0, 180.0, dark);
        CHECK(poa == doctest::Approx(200.0).epsilon(1e-12));
    }
    SUBCASE("hand-computed co-azimuthal sum") {
        // ghi=600, dni=500, zenith=40, tilt=30: beam 492.404 + sky 202.443 +
        // ground 8.038 = 702.885.
        const double poa = poa_irradiance(600.0, 500.0, pos, 30.0, 180.0, cfg);
        CHECK(poa == doctest::Approx(702.8854).epsilon(1e-6));
    }
}

TEST_CASE("cell_temperature") {
    PvConfig cfg;
    CHECK(cell_temperature(0.0, 300.0, 3.0, cfg) == doctest::Approx(300.0));
    CHECK(cell_temperature(1000.0, 300.0, 0.0, cfg) ==
          doctest::Approx(300.0 + 28.4388).epsilon(1e-4));

    SUBCASE("wind ratio follows exp(b * delta_wind)") {
        const double rise_a = cell_temperature(1000.0, 300.0, 0.76, cfg) - 300.0;
        const double rise_b = cell_temperature(1000.0, 300.0, 10.0, cfg) - 300.0;
        CHECK(rise_b / rise_a == doctest::Approx(std::exp(-0.075 * (10.0 - 0.76))).epsilon(1e-10));
    }
    SUBCASE("monotone in poa, anti-monotone in wind") {
        CHECK(cell_temperature(800.0, 300.0, 3.0, cfg) > cell_temperature(400.0, 300.0, 3.0, cfg));
        CHECK(cell_temperature(800.0, 300.0, 6.0, cfg) < cell_temperature(800.0, 300.0, 3.0, cfg));
    }
}

TEST_CASE("hourly_yield") {
    PvConfig cfg;
    auto w = synth_weather(31, WeatherProfile::Subtropical);
    const auto yield = hourly_yield(apply_warming(w, 0.0), 25.0, 30.0, cfg);

    SUBCASE("night hours produce nothing") {
        for (int h = 0; h < kHoursPerYear; ++h) {
            const auto pos = solar_position(25.0, 30.0, h);
            if (pos.zenith_deg >= 90.0) CHECK(yield.yield_norm[h] == 0.0);
        }
    }
    SUBCASE("non-negative with headroom cap") {
        for (int h = 0; h < kHoursPerYear; ++h) {
            CHECK(yield.yield_norm[h] >= 0.0);
            CHECK(yield.yield_norm[h] <= cfg.derate * 1.25e-3);
        }
    }
    SUBCASE("deterministic") {
        const auto again = hourly_yield(apply_warming(w, 0.0), 25.0, 30.0, cfg);
        CHECK(again.yield_norm == yield.yield_norm);
    }
    SUBCASE("uniform +5 K warming lowers annual yield") {
        double base = 0.0, warm = 0.0;
        const auto hot = hourly_yield(apply_warming(w, 5.0), 25.0, 30.0, cfg);
        for (int h = 0; h < kHoursPerYear; ++h) {
            base += yield.yield_norm[h];
            warm += hot.yield_norm[h];
        }
        CHECK(base > 0.0);
        CHECK(warm < base);
    }
    SUBCASE("reference conditions give exactly the derate") {
        // Direct check on the power law rather than via a full weather series.
        const double poa = 1000.0;
        const double power = (poa / 1000.0) * (1.0 + cfg.gamma_p * (298.15 - 298.15)) * cfg.derate;
        CHECK(power * 1e-3 == doctest::Approx(0.90e-3).epsilon(1e-12));
        const double hot = (poa / 1000.0) * (1.0 + cfg.gamma_p * (333.15 - 298.15)) * cfg.derate;
        CHECK(hot * 1e-3 == doctest::Approx(7.5825e-4).epsilon(1e-10));
    }
}
