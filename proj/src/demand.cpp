#include "coolgrid/demand.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coolgrid {

namespace {

void require_year_length(const std::vector<double>& s) {
    if (s.size() != kHoursPerYear)
        throw std::runtime_error("expected an 8760-hour series, got " +
                                 std::to_string(s.size()) + " values");
}

} // namespace

double cdd_annual(const std::vector<double>& temperature_k, const DemandParams& params) {
    require_year_length(temperature_k);
    double cdd = 0.0;
    for (int d = 0; d < 365; ++d) {
        double daily = 0.0;
        for (int hod = 0; hod < 24; ++hod) daily += temperature_k[d * 24 + hod];
        daily /= 24.0;
        cdd += std::max(daily - params.t_base_k, 0.0);
    }
    return cdd;
}

std::vector<double> cdh_hourly(const std::vector<double>& temperature_k,
                               const DemandParams& params) {
    require_year_length(temperature_k);
    std::vector<double> cdh(kHoursPerYear);
    for (int h = 0; h < kHoursPerYear; ++h)
        cdh[h] = std::max(temperature_k[h] - params.t_base_k, 0.0);
    return cdh;
}

double climate_max_saturation(double cdd_a, const DemandParams& params) {
    if (cdd_a < 0.0) throw std::runtime_error("negative annual CDD");
    const double s = 1.0 - params.smax_a * std::exp(-params.smax_b * cdd_a);
    return std::clamp(s, 0.0, 1.0);
}

double availability(double gdp_per_cap, const DemandParams& params) {
    if (gdp_per_cap < 0.0) throw std::runtime_error("negative GDP per capita");
    return 1.0 / (1.0 + std::exp(-params.avail_slope * gdp_per_cap + params.avail_intercept));
}

double household_annual_kwh(double cdd_a, double gdp_per_cap, const DemandParams& params) {
    const double gdp = std::max(gdp_per_cap, 1.0);
    const double per_cdd = std::max(params.eh_log_coeff * std::log(gdp) - params.eh_const, 0.0);
    return cdd_a * per_cdd;
}

AnnualDemand annual_population_kwh(const GridCell& cell, const SocioState& socio,
                                   double cdd_a, const DemandParams& params) {
    if (socio.household_size <= 0.0)
        throw std::runtime_error("household size must be positive");
    const double households = cell.population / socio.household_size;
    const double a = availability(socio.gdp_per_cap, params);
    const double smax = climate_max_saturation(cdd_a, params);
    const double eh = household_annual_kwh(cdd_a, socio.gdp_per_cap, params);
    AnnualDemand out;
    out.ac_households = households * a * smax;
    out.annual_kwh = out.ac_households * eh * socio.eta_efficiency;
    return out;
}

std::vector<double> cop_hourly(const std::vector<double>& temperature_k,
                               const CopParams& cop, const DemandParams& params) {
    require_year_length(temperature_k);
    const double t_cold = params.t_base_k - cop.delta_t2_k;
    std::vector<double> out(kHoursPerYear);
    for (int h = 0; h < kHoursPerYear; ++h) {
        const double t_hot = std::max(temperature_k[h], params.t_base_k) + cop.delta_t1_k;
        out[h] = cop.eta_carnot * t_cold / (t_hot - t_cold);
    }
    return out;
}

std::vector<double> disaggregate_hourly(double annual_kwh,
                                        const std::vector<double>& cdh,
                                        const std::vector<double>& cop) {
    require_year_length(cdh);
    require_year_length(cop);
    if (annual_kwh < 0.0) throw std::runtime_error("negative annual energy");

    std::vector<double> hourly(kHoursPerYear, 0.0);
    if (annual_kwh == 0.0) return hourly;

    double weight_sum = 0.0;
    for (int h = 0; h < kHoursPerYear; ++h) weight_sum += cdh[h] / cop[h];
    if (weight_sum <= 0.0)
        throw std::runtime_error("degenerate climate: positive annual demand with zero CDH");

    for (int h = 0; h < kHoursPerYear; ++h)
        hourly[h] = annual_kwh * (cdh[h] / cop[h]) / weight_sum;
    return hourly;
}

DemandSeries demand_series(const GridCell& cell, const WarmedWeather& weather,
                           const SocioState& socio, const CopParams& cop,
                           const DemandParams& params) {
    std::vector<double> temp(kHoursPerYear);
    for (int h = 0; h < kHoursPerYear; ++h) temp[h] = weather.temperature_k(h);

    DemandSeries out;
    out.cdd_annual = cdd_annual(temp, params);
    const auto annual = annual_population_kwh(cell, socio, out.cdd_annual, params);
    out.annual_kwh = annual.annual_kwh;
    out.ac_households = annual.ac_households;
    out.cop_hourly = cop_hourly(temp, cop, params);
    const auto cdh = cdh_hourly(temp, params);
    if (out.annual_kwh > 0.0) {
        out.hourly_kwh = disaggregate_hourly(out.annual_kwh, cdh, out.cop_hourly);
    } else {
        out.hourly_kwh.assign(kHoursPerYear, 0.0);
    }
    return out;
}

} // namespace coolgrid
