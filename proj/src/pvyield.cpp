#include "coolgrid/pvyield.hpp"

#include <algorithm>
#include <cmath>

namespace coolgrid {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSolarConstant = 1367.0; // W/m^2
constexpr double kDiscZenithCutoffDeg = 87.0;

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

// Spencer (1971) Fourier series for solar declination, radians.
double declination_rad(int day_of_year) {
    const double g = 2.0 * kPi * (day_of_year - 1) / 365.0;
    return 0.006918 - 0.399912 * std::cos(g) + 0.070257 * std::sin(g) -
           0.006758 * std::cos(2 * g) + 0.000907 * std::sin(2 * g) -
           0.002697 * std::cos(3 * g) + 0.00148 * std::sin(3 * g);
}

} // namespace

double PvConfig::tilt_for(double latitude) const {
    return tilt_deg ? *tilt_deg : std::abs(latitude);
}

double PvConfig::azimuth_for(double latitude) const {
    if (azimuth_deg) return *azimuth_deg;
    return latitude >= 0.0 ? 180.0 : 0.0;
}

SolarPosition solar_position(double latitude_deg, double /*longitude_deg*/, int hour_index) {
    const int day_of_year = hour_index / 24 + 1;
    const int hour_of_day = hour_index % 24;

    const double decl = declination_rad(day_of_year);
    const double lat = deg2rad(latitude_deg);
    const double hour_angle = deg2rad(15.0 * (hour_of_day - 12));

    const double cos_zen = std::clamp(std::sin(lat) * std::sin(decl) +
                                          std::cos(lat) * std::cos(decl) * std::cos(hour_angle),
                                      -1.0, 1.0);
    const double zenith = std::acos(cos_zen);

    // Azimuth measured from north, clockwise.
    const double sin_zen = std::sin(zenith);
    double azimuth = 0.0;
    if (sin_zen > 1e-9) {
        const double cos_az = std::clamp(
            (std::sin(decl) - std::sin(lat) * cos_zen) / (std::cos(lat) * sin_zen), -1.0, 1.0);
        azimuth = std::acos(cos_az);
        if (hour_angle > 0.0) azimuth = 2.0 * kPi - azimuth;
    }

    SolarPosition pos;
    pos.zenith_deg = rad2deg(zenith);
    pos.azimuth_deg = rad2deg(azimuth);
    pos.extraterrestrial_normal =
        kSolarConstant * (1.0 + 0.033 * std::cos(2.0 * kPi * day_of_year / 365.0));
    return pos;
}

double disc_dni(double ghi, const SolarPosition& pos, double pressure_pa) {
    if (ghi <= 0.0 || pos.zenith_deg >= kDiscZenithCutoffDeg) return 0.0;

    const double cos_zen = std::cos(deg2rad(pos.zenith_deg));
    const double kt =
        std::clamp(ghi / (pos.extraterrestrial_normal * cos_zen), 0.0, 1.0);

    // Kasten airmass with pressure correction.
    const double am = 1.0 / (cos_zen + 0.15 * std::pow(93.885 - pos.zenith_deg, -1.253)) *
                      pressure_pa / 101325.0;

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

    const double knc = 0.866 - 0.122 * am + 0.0121 * am * am - 0.000653 * am * am * am +
                       1.4e-5 * am * am * am * am;
    const double kn = knc - (a + b * std::exp(c * am));
    return std::clamp(kn * pos.extraterrestrial_normal, 0.0, pos.extraterrestrial_normal);
}

double poa_irradiance(double ghi, double dni, const SolarPosition& pos,
                      double tilt_deg, double surface_azimuth_deg, const PvConfig& cfg) {
    const double cos_zen = std::cos(deg2rad(pos.zenith_deg));
    const double dhi = std::max(ghi - dni * cos_zen, 0.0);

    const double tilt = deg2rad(tilt_deg);
    const double cos_aoi = cos_zen * std::cos(tilt) +
                           std::sin(deg2rad(pos.zenith_deg)) * std::sin(tilt) *
                               std::cos(deg2rad(pos.azimuth_deg - surface_azimuth_deg));

    const double beam = dni * std::max(cos_aoi, 0.0);
    const double sky = dhi * (1.0 + std::cos(tilt)) / 2.0;
    const double ground = ghi * cfg.albedo * (1.0 - std::cos(tilt)) / 2.0;
    return beam + sky + ground;
}

double cell_temperature(double poa, double t_amb_k, double wind_ms, const PvConfig& cfg) {
    return t_amb_k + poa * std::exp(cfg.cell_temp_a + cfg.cell_temp_b * wind_ms);
}

YieldSeries hourly_yield(const WarmedWeather& w, double latitude_deg,
                         double longitude_deg, const PvConfig& cfg) {
    w.base.validate();
    const double tilt = cfg.tilt_for(latitude_deg);
    const double surf_az = cfg.azimuth_for(latitude_deg);

    YieldSeries out;
    out.yield_norm.resize(kHoursPerYear, 0.0);
    for (int h = 0; h < kHoursPerYear; ++h) {
        const auto pos = solar_position(latitude_deg, longitude_deg, h);
        if (pos.zenith_deg >= 90.0) continue;
        const double ghi = w.base.ghi_wm2[h];
        if (ghi <= 0.0) continue;

        const double dni = disc_dni(ghi, pos, w.base.pressure_pa[h]);
        const double poa = poa_irradiance(ghi, dni, pos, tilt, surf_az, cfg);
        const double t_cell = cell_temperature(poa, w.temperature_k(h), w.base.wind_ms[h], cfg);

        double power_per_w = (poa / 1000.0) * (1.0 + cfg.gamma_p * (t_cell - 298.15)) * cfg.derate;
        power_per_w = std::clamp(power_per_w, 0.0, 1.25 * cfg.derate);
        out.yield_norm[h] = power_per_w * 1e-3; // 1 h at this power, in kWh per rated W
    }
    return out;
}

} // namespace coolgrid
