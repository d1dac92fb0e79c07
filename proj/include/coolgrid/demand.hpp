#pragma once

#include <vector>

#include "coolgrid/geogrid.hpp"

namespace coolgrid {

struct DemandParams {
    double t_base_k = 291.15;        // 18 C
    double smax_a = 0.949;
    double smax_b = 0.00187;         // per CDD
    double avail_slope = 0.304e-3;   // per dollar
    double avail_intercept = 4.152;
    double eh_log_coeff = 0.865;     // kWh per CDD
    double eh_const = 5.825;         // kWh per CDD
};

struct CopParams {
    double eta_carnot = 0.16;
    double delta_t1_k = 5.0;
    double delta_t2_k = 5.0;
};

struct SocioState {
    double gdp_per_cap = 0.0;    // PPP-2005 USD / person
    double household_size = 1.0; // persons / household
    double eta_efficiency = 1.0; // 1.0 at year 2000
};

struct DemandSeries {
    double annual_kwh = 0.0;
    std::vector<double> hourly_kwh; // length 8760, sums to annual_kwh
    double ac_households = 0.0;     // N * A * S_max
    double cdd_annual = 0.0;
    std::vector<double> cop_hourly; // length 8760
};

// Annual cooling degree days from daily-mean temperature above t_base.
double cdd_annual(const std::vector<double>& temperature_k, const DemandParams& params);

// Hourly cooling degree hours: max(T(t) - t_base, 0).
std::vector<double> cdh_hourly(const std::vector<double>& temperature_k, const DemandParams& params);

// S_max = 1 - a*exp(-b*cdd_a), clamped to [0, 1].
double climate_max_saturation(double cdd_a, const DemandParams& params);

// Logistic AC availability as a function of income.
double availability(double gdp_per_cap, const DemandParams& params);

// Annual kWh per AC household. Income below the log zero-crossing clamps to 0.
double household_annual_kwh(double cdd_a, double gdp_per_cap, const DemandParams& params);

struct AnnualDemand {
    double annual_kwh = 0.0;
    double ac_households = 0.0;
};

AnnualDemand annual_population_kwh(const GridCell& cell, const SocioState& socio,
                                   double cdd_a, const DemandParams& params);

// Carnot cooling COP with evaporator at t_base - dT2 and condenser at
// max(T, t_base) + dT1; positive and finite for all inputs.
std::vector<double> cop_hourly(const std::vector<double>& temperature_k,
                               const CopParams& cop, const DemandParams& params);

// Distributes annual energy over hours with weights CDH/COP, renormalized so
// the hourly series sums exactly to the annual total.
std::vector<double> disaggregate_hourly(double annual_kwh,
                                        const std::vector<double>& cdh,
                                        const std::vector<double>& cop);

DemandSeries demand_series(const GridCell& cell, const WarmedWeather& weather,
                           const SocioState& socio, const CopParams& cop,
                           const DemandParams& params);

} // namespace coolgrid
