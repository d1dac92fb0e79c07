#include "coolgrid/reference.hpp"

#include <cmath>
#include <vector>

namespace coolgrid::reference {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

CellYearResult cell_year(const GridCell& cell, const HourlyWeather& climatology,
                         const SocioState& socio, double delta_t_k, double eta_ca,
                         int year, const ModelParams& params) {
    const int n_hours = 8760;
    const DemandParams& dp = params.demand;
    const PvConfig& pv = params.pv;
    const StorageSpec& st = params.storage;

    CellYearResult out;
    out.cell_id = cell.cell_id;
    out.year = year;

    std::vector<double> temp(n_hours);
    for (int h = 0; h < n_hours; ++h)
        temp[h] = climatology.temperature_k[h] + delta_t_k;

    // Annual CDD from daily means.
    double cdd = 0.0;
    for (int d = 0; d < 365; ++d) {
        double daily = 0.0;
        for (int k = 0; k < 24; ++k) daily += temp[d * 24 + k];
        daily /= 24.0;
        if (daily > dp.t_base_k) cdd += daily - dp.t_base_k;
    }

    // Annual demand, Eq. 1 factors.
    const double households = cell.population / socio.household_size;
    const double avail =
        1.0 / (1.0 + std::exp(-dp.avail_slope * socio.gdp_per_cap + dp.avail_intercept));
    double smax = 1.0 - dp.smax_a * std::exp(-dp.smax_b * cdd);
    if (smax < 0.0) smax = 0.0;
    if (smax > 1.0) smax = 1.0;
    const double gdp = socio.gdp_per_cap < 1.0 ? 1.0 : socio.gdp_per_cap;
    double eh_per_cdd = dp.eh_log_coeff * std::log(gdp) - dp.eh_const;
    if (eh_per_cdd < 0.0) eh_per_cdd = 0.0;
    const double eh = cdd * eh_per_cdd;

    out.ac_households = households * avail * smax;
    out.annual_load_kwh = out.ac_households * eh * socio.eta_efficiency;
    if (out.annual_load_kwh <= 0.0) return out;

    // Hourly CDH, COP, demand disaggregation.
    std::vector<double> cdh(n_hours), cop(n_hours);
    const double t_cold = dp.t_base_k - params.cop.delta_t2_k;
    for (int h = 0; h < n_hours; ++h) {
        cdh[h] = temp[h] > dp.t_base_k ? temp[h] - dp.t_base_k : 0.0;
        const double t_floor = temp[h] > dp.t_base_k ? temp[h] : dp.t_base_k;
        cop[h] = eta_ca * t_cold / (t_floor + params.cop.delta_t1_k - t_cold);
    }
    double weight_sum = 0.0;
    for (int h = 0; h < n_hours; ++h) weight_sum += cdh[h] / cop[h];
    std::vector<double> demand(n_hours);
    for (int h = 0; h < n_hours; ++h)
        demand[h] = out.annual_load_kwh * (cdh[h] / cop[h]) / weight_sum;

    // PV yield: solar position -> DISC -> isotropic transposition -> derate.
    const double tilt_deg = pv.tilt_deg ? *pv.tilt_deg : std::fabs(cell.latitude);
    const double surf_az_deg =
        pv.azimuth_deg ? *pv.azimuth_deg : (cell.latitude >= 0.0 ? 180.0 : 0.0);
    const double tilt = tilt_deg * kPi / 180.0;
    const double lat = cell.latitude * kPi / 180.0;

    std::vector<double> yield(n_hours, 0.0);
    for (int h = 0; h < n_hours; ++h) {
        const double ghi = climatology.ghi_wm2[h];
        if (ghi <= 0.0) continue;

        const int day = h / 24 + 1;
        const int hod = h % 24;
        const double g = 2.0 * kPi * (day - 1) / 365.0;
        const double decl = 0.006918 - 0.399912 * std::cos(g) + 0.070257 * std::sin(g) -
                            0.006758 * std::cos(2 * g) + 0.000907 * std::sin(2 * g) -
                            0.002697 * std::cos(3 * g) + 0.00148 * std::sin(3 * g);
        const double ha = 15.0 * (hod - 12) * kPi / 180.0;
        double cosz = std::sin(lat) * std::sin(decl) +
                      std::cos(lat) * std::cos(decl) * std::cos(ha);
        if (cosz > 1.0) cosz = 1.0;
        if (cosz < -1.0) cosz = -1.0;
        const double zen = std::acos(cosz);
        const double zen_deg = zen * 180.0 / kPi;
        if (zen_deg >= 90.0) continue;

        const double e0 = 1367.0 * (1.0 + 0.033 * std::cos(2.0 * kPi * day / 365.0));

        double sun_az = 0.0;
        const double sinz = std::sin(zen);
        if (sinz > 1e-9) {
            double cos_az = (std::sin(decl) - std::sin(lat) * cosz) / (std::cos(lat) * sinz);
            if (cos_az > 1.0) cos_az = 1.0;
            if (cos_az < -1.0) cos_az = -1.0;
            sun_az = std::acos(cos_az);
            if (ha > 0.0) sun_az = 2.0 * kPi - sun_az;
        }

        double dni = 0.0;
        if (zen_deg < 87.0) {
            double kt = ghi / (e0 * cosz);
            if (kt < 0.0) kt = 0.0;
            if (kt > 1.0) kt = 1.0;
            const double am = 1.0 / (cosz + 0.15 * std::pow(93.885 - zen_deg, -1.253)) *
                              climatology.pressure_pa[h] / 101325.0;
            double a, b, c;
            if (kt <= 0.6) {
                a = 0.512 - 1.56 * kt + 2.286 * kt * kt - 2.222 * kt * kt * kt;
                b = 0.37 + 0.962 * kt;
                c = -0.28 + 0.932 * kt - 2.048 * kt * kt;
            } else {
                a = -5.743 + 21.77 * kt - 27.49 * kt * kt + 11.56 * kt * kt * kt;
                b = 41.4 - 118.5 * kt + 66.05 * kt * kt + 31.9 * kt * kt * kt;
                c = -47.01 + 184.2 * kt - 222.0 * kt * kt + 73.81 * kt * kt * kt;
            }
            const double knc = 0.866 - 0.122 * am + 0.0121 * am * am -
                               0.000653 * am * am * am + 1.4e-5 * am * am * am * am;
            dni = (knc - (a + b * std::exp(c * am))) * e0;
            if (dni < 0.0) dni = 0.0;
            if (dni > e0) dni = e0;
        }

        double dhi = ghi - dni * cosz;
        if (dhi < 0.0) dhi = 0.0;
        double cos_aoi = cosz * std::cos(tilt) +
                         sinz * std::sin(tilt) *
                             std::cos((sun_az * 180.0 / kPi - surf_az_deg) * kPi / 180.0);
        if (cos_aoi < 0.0) cos_aoi = 0.0;
        const double poa = dni * cos_aoi + dhi * (1.0 + std::cos(tilt)) / 2.0 +
                           ghi * pv.albedo * (1.0 - std::cos(tilt)) / 2.0;

        const double t_cell =
            temp[h] + poa * std::exp(pv.cell_temp_a + pv.cell_temp_b * climatology.wind_ms[h]);
        double power = (poa / 1000.0) * (1.0 + pv.gamma_p * (t_cell - 298.15)) * pv.derate;
        if (power < 0.0) power = 0.0;
        if (power > 1.25 * pv.derate) power = 1.25 * pv.derate;
        yield[h] = power * 1e-3;
    }

    double yield_sum = 0.0;
    for (int h = 0; h < n_hours; ++h) yield_sum += yield[h];
    out.capacity_w = out.annual_load_kwh / yield_sum;

    std::vector<double> pv_kwh(n_hours);
    for (int h = 0; h < n_hours; ++h) pv_kwh[h] = out.capacity_w * yield[h];

    double matched = 0.0, total = 0.0;
    for (int h = 0; h < n_hours; ++h) {
        matched += demand[h] < pv_kwh[h] ? demand[h] : pv_kwh[h];
        total += demand[h];
    }
    out.direct_fraction = matched / total;

    // Ice storage dispatch.
    const double soc_max =
        out.ac_households * st.volume_m3 * st.density_kg_per_m3 * st.latent_kj_per_kg / 3600.0;
    const double standby = st.u_value_w_m2k * st.area_m2 * (dp.t_base_k - st.t_storage_k) *
                           out.ac_households / 1000.0;
    const double t_cold_st = st.t_storage_k - params.cop.delta_t2_k;

    double soc = 0.0, unmet_total = 0.0;
    for (int h = 0; h < n_hours; ++h) {
        soc -= standby;
        if (soc < 0.0) soc = 0.0;
        if (pv_kwh[h] >= demand[h]) {
            const double t_floor = temp[h] > dp.t_base_k ? temp[h] : dp.t_base_k;
            const double cop_st =
                eta_ca * t_cold_st / (t_floor + params.cop.delta_t1_k - t_cold_st);
            double charge = (pv_kwh[h] - demand[h]) * cop_st;
            if (charge > soc_max - soc) charge = soc_max - soc;
            soc += charge;
        } else {
            const double deficit = (demand[h] - pv_kwh[h]) * cop[h];
            double discharge = deficit;
            if (discharge > soc) discharge = soc;
            soc -= discharge;
            unmet_total += (deficit - discharge) / cop[h];
        }
    }
    out.storage_fraction = 1.0 - unmet_total / total;
    return out;
}

} // namespace coolgrid::reference
