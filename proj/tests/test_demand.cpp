#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>
#include <random>

#include "coolgrid/demand.hpp"

using namespace coolgrid;

namespace {
const DemandParams kParams;
std::vector<double> constant_series(double value) {
    return std::vector<double>(kHoursPerYear, value);
}
} // namespace

TEST_CASE("cdd_annual") {
    CHECK(cdd_annual(constant_series(291.15), kParams) == doctest::Approx(0.0));
    CHECK(cdd_annual(constant_series(301.15), kParams) == doctest::Approx(3650.0));

    SUBCASE("daily mean decides, not hourly exceedance") {
        // 12 h at 30 C, 12 h at 10 C -> daily mean 20 C -> 2 CDD per day.
        std::vector<double> t(kHoursPerYear);
        for (int h = 0; h < kHoursPerYear; ++h)
            t[h] = (h % 24) < 12 ? 303.15 : 283.15;
        CHECK(cdd_annual(t, kParams) == doctest::Approx(2.0 * 365));
    }
    SUBCASE("length checked") {
        std::vector<double> t(100, 300.0);
        CHECK_THROWS_AS(cdd_annual(t, kParams), std::runtime_error);
    }
}

TEST_CASE("cdh_hourly") {
    CHECK(cdh_hourly(constant_series(291.15), kParams) == constant_series(0.0));
    CHECK(cdh_hourly(constant_series(303.15), kParams)[1234] == doctest::Approx(12.0));

    SUBCASE("sum of CDH / 24 bounds CDD from above") {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> td(280.0, 310.0);
        std::vector<double> t(kHoursPerYear);
        for (auto& x : t) x = td(rng);
        const auto cdh = cdh_hourly(t, kParams);
        const double cdh_sum = std::accumulate(cdh.begin(), cdh.end(), 0.0);
        CHECK(cdh_sum / 24.0 >= cdd_annual(t, kParams) - 1e-9);
    }
}

TEST_CASE("climate_max_saturation fixed points") {
    CHECK(climate_max_saturation(0.0, kParams) == doctest::Approx(0.051).epsilon(1e-12));
    CHECK(climate_max_saturation(1200.0, kParams) == doctest::Approx(0.8994).epsilon(2e-4));
    CHECK(climate_max_saturation(10000.0, kParams) ==
          doctest::Approx(1.0 - 0.949 * std::exp(-18.7)).epsilon(1e-12));
    CHECK_THROWS_AS(climate_max_saturation(-1.0, kParams), std::runtime_error);

    SUBCASE("strictly increasing") {
        double prev = -1.0;
        for (double cdd = 0.0; cdd < 5000.0; cdd += 37.0) {
            const double s = climate_max_saturation(cdd, kParams);
            CHECK(s > prev);
            prev = s;
        }
    }
}

TEST_CASE("availability fixed points") {
    CHECK(availability(0.0, kParams) == doctest::Approx(0.015489228).epsilon(1e-6));
    CHECK(availability(1e9, kParams) == doctest::Approx(1.0));
    // A = 0.9 solved from the logistic: exponent = ln(1/9).
    CHECK(availability(20885.0, kParams) == doctest::Approx(0.900).epsilon(1e-4));
    CHECK_THROWS_AS(availability(-5.0, kParams), std::runtime_error);

    SUBCASE("strictly increasing") {
        double prev = 0.0;
        for (double gdp = 0.0; gdp < 100000.0; gdp += 997.0) {
            const double a = availability(gdp, kParams);
            CHECK(a > prev);
            prev = a;
        }
    }
}

TEST_CASE("household_annual_kwh") {
    CHECK(household_annual_kwh(0.0, 50000.0, kParams) == doctest::Approx(0.0));
    // Washington D.C. CDD with 2015 US income.
    CHECK(household_annual_kwh(1140.0, 45330.0, kParams) == doctest::Approx(3932.19).epsilon(1e-4));
    // Below the zero of the log bracket (~841 USD) the demand clamps to zero.
    CHECK(household_annual_kwh(2000.0, 800.0, kParams) == doctest::Approx(0.0));

    SUBCASE("non-decreasing in both arguments") {
        CHECK(household_annual_kwh(1200.0, 10000.0, kParams) >=
              household_annual_kwh(1100.0, 10000.0, kParams));
        CHECK(household_annual_kwh(1200.0, 20000.0, kParams) >=
              household_annual_kwh(1200.0, 10000.0, kParams));
    }
}

TEST_CASE("annual_population_kwh") {
    GridCell cell{1, 10.0, 20.0, "USA", 0.0};
    SocioState socio{30000.0, 2.5, 1.0};

    SUBCASE("zero population gives zero demand") {
        const auto d = annual_population_kwh(cell, socio, 1500.0, kParams);
        CHECK(d.annual_kwh == 0.0);
        CHECK(d.ac_households == 0.0);
    }
    SUBCASE("hand product N*A*Smax*Eh*eta") {
        // Pick inputs whose factors are easy to read back out.
        cell.population = 2500.0; // N = 1000 households
        const double a = availability(socio.gdp_per_cap, kParams);
        const double smax = climate_max_saturation(1500.0, kParams);
        const double eh = household_annual_kwh(1500.0, socio.gdp_per_cap, kParams);
        const auto d = annual_population_kwh(cell, socio, 1500.0, kParams);
        CHECK(d.ac_households == doctest::Approx(1000.0 * a * smax).epsilon(1e-12));
        CHECK(d.annual_kwh == doctest::Approx(1000.0 * a * smax * eh).epsilon(1e-12));
    }
    SUBCASE("linear in eta") {
        cell.population = 1000.0;
        socio.eta_efficiency = 1.0;
        const auto full = annual_population_kwh(cell, socio, 1500.0, kParams);
        socio.eta_efficiency = 0.5467;
        const auto scaled = annual_population_kwh(cell, socio, 1500.0, kParams);
        CHECK(scaled.annual_kwh == doctest::Approx(full.annual_kwh * 0.5467).epsilon(1e-12));
    }
    SUBCASE("invalid household size") {
        socio.household_size = 0.0;
        CHECK_THROWS_AS(annual_population_kwh(cell, socio, 0.0, kParams), std::runtime_error);
    }
}

TEST_CASE("cop_hourly") {
    CopParams cop; // eta 0.16, dT1 = dT2 = 5 K

    CHECK(cop_hourly(constant_series(308.15), cop, kParams)[0] ==
          doctest::Approx(1.6957).epsilon(1e-4));
    CHECK(cop_hourly(constant_series(298.15), cop, kParams)[0] ==
          doctest::Approx(2.6932).epsilon(1e-4));

    SUBCASE("strictly decreasing in T above t_base") {
        double prev = 1e9;
        for (double t = 292.0; t < 330.0; t += 0.5) {
            const double c = cop_hourly(constant_series(t), cop, kParams)[0];
            CHECK(c < prev);
            CHECK(c > 0.0);
            prev = c;
        }
    }
    SUBCASE("bounded above by the delta-T limit") {
        const double bound = cop.eta_carnot * (kParams.t_base_k - cop.delta_t2_k) /
                             (cop.delta_t1_k + cop.delta_t2_k);
        for (double t : {150.0, 280.0, 291.15, 300.0, 349.0})
            CHECK(cop_hourly(constant_series(t), cop, kParams)[0] <= bound + 1e-12);
    }
}

TEST_CASE("disaggregate_hourly") {
    SUBCASE("zero annual energy gives zero series") {
        const auto h = disaggregate_hourly(0.0, constant_series(0.0), constant_series(1.0));
        CHECK(std::accumulate(h.begin(), h.end(), 0.0) == 0.0);
    }
    SUBCASE("single-support weight concentrates everything") {
        std::vector<double> cdh(kHoursPerYear, 0.0), cop(kHoursPerYear, 2.0);
        cdh[4000] = 3.0;
        const auto h = disaggregate_hourly(500.0, cdh, cop);
        CHECK(h[4000] == doctest::Approx(500.0));
        CHECK(h[0] == 0.0);
    }
    SUBCASE("hand-normalized three-hour toy") {
        // CDH=[1,2,0,...], COP=[1,2,1,...], annual=2 -> weights [1,1,0] -> [1,1,0].
        std::vector<double> cdh(kHoursPerYear, 0.0), cop(kHoursPerYear, 1.0);
        cdh[0] = 1.0;
        cdh[1] = 2.0;
        cop[1] = 2.0;
        const auto h = disaggregate_hourly(2.0, cdh, cop);
        CHECK(h[0] == doctest::Approx(1.0));
        CHECK(h[1] == doctest::Approx(1.0));
        CHECK(h[2] == 0.0);
    }
    SUBCASE("degenerate climate rejected") {
        CHECK_THROWS_AS(disaggregate_hourly(10.0, constant_series(0.0), constant_series(1.0)),
                        std::runtime_error);
    }
    SUBCASE("conservation and support on randomized inputs") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> cd(0.0, 15.0), kd(0.5, 4.0);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> cdh(kHoursPerYear), cop(kHoursPerYear);
            for (int h = 0; h < kHoursPerYear; ++h) {
                cdh[h] = rng() % 3 == 0 ? 0.0 : cd(rng);
                cop[h] = kd(rng);
            }
            const double annual = 1000.0 + 100.0 * rep;
            const auto series = disaggregate_hourly(annual, cdh, cop);
            const double sum = std::accumulate(series.begin(), series.end(), 0.0);
            CHECK(std::fabs(sum - annual) / annual < 1e-9);
            for (int h = 0; h < kHoursPerYear; ++h) {
                if (cdh[h] == 0.0) CHECK(series[h] == 0.0);
                else CHECK(series[h] > 0.0);
            }
        }
    }
}
