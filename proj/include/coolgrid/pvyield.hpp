#pragma once

#include <optional>
#include <vector>

#include "coolgrid/geogrid.hpp"

namespace coolgrid {

struct PvConfig {
    std::optional<double> tilt_deg;    // default |latitude|
    std::optional<double> azimuth_deg; // default 180 north of equator, 0 south
    double derate = 0.90;
    double gamma_p = -0.0045;          // per K, referenced to 25 C
    double albedo = 0.2;
    double cell_temp_a = -3.56;
    double cell_temp_b = -0.075;       // s/m

    double tilt_for(double latitude) const;
    double azimuth_for(double latitude) const;
};

struct SolarPosition {
    double zenith_deg = 0.0;
    double azimuth_deg = 0.0;               // from north, clockwise
    double extraterrestrial_normal = 1367.0; // W/m^2
};

struct YieldSeries {
    std::vector<double> yield_norm; // kWh per rated W per hour, length 8760
};

// Zenith/azimuth from declination and hour angle in local solar time;
// hour angle is 0 at hour-of-day 12.
SolarPosition solar_position(double latitude_deg, double longitude_deg, int hour_index);

// DISC decomposition of GHI into DNI. Returns 0 for zenith >= 87 deg;
// result clamped to [0, extraterrestrial_normal].
double disc_dni(double ghi, const SolarPosition& pos, double pressure_pa);

// Isotropic-sky transposition: beam + sky diffuse + ground reflected.
double poa_irradiance(double ghi, double dni, const SolarPosition& pos,
                      double tilt_deg, double surface_azimuth_deg, const PvConfig& cfg);

// T_cell = T_amb + POA * exp(a + b*wind).
double cell_temperature(double poa, double t_amb_k, double wind_ms, const PvConfig& cfg);

YieldSeries hourly_yield(const WarmedWeather& w, double latitude_deg,
                         double longitude_deg, const PvConfig& cfg);

} // namespace coolgrid
