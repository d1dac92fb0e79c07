#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coolgrid {

inline constexpr int kHoursPerYear = 8760;

// One census/climate cell with population already aggregated onto it.
struct GridCell {
    std::int64_t cell_id = 0;
    double latitude = 0.0;   // degrees, [-90, 90]
    double longitude = 0.0;  // degrees, [-180, 180)
    std::string country;     // ISO-3166 alpha-3
    double population = 0.0; // persons, real-valued
};

// 8760-hour climatology, non-leap year, hour 0 = Jan 1 00:00 local solar time.
struct HourlyWeather {
    std::vector<double> temperature_k; // [150, 350] K
    std::vector<double> ghi_wm2;       // >= 0
    std::vector<double> wind_ms;       // >= 0
    std::vector<double> pressure_pa;   // > 0

    void validate(const std::string& context = {}) const;
};

// Weather with a uniform warming offset applied to temperature.
struct WarmedWeather {
    HourlyWeather base;
    double delta_t_k = 0.0;

    double temperature_k(int hour) const { return base.temperature_k[hour] + delta_t_k; }
};

enum class WeatherProfile { Equatorial, Subtropical, Temperate, Constant };

WeatherProfile parse_profile(const std::string& name);
double profile_latitude(WeatherProfile profile);

// Cells file: CSV, header `cell_id,lat,lon,country,population`.
std::vector<GridCell> load_cells(const std::string& path);
void write_cells(const std::vector<GridCell>& cells, const std::string& path);

// Weather blocks: per-cell CSV with header `temp_K,ghi_Wm2,wind_ms,pressure_Pa`,
// 8760 rows. The manifest is a CSV `cell_id,path` with paths relative to it.
HourlyWeather load_weather_block(const std::string& path);
void write_weather_block(const HourlyWeather& w, const std::string& path);
std::vector<std::pair<std::int64_t, std::string>> load_weather_manifest(const std::string& path);

// Per-hour mean across N whole years; input length must be N*8760.
HourlyWeather build_climatology(const std::vector<double>& temperature_k,
                                const std::vector<double>& ghi_wm2,
                                const std::vector<double>& wind_ms,
                                const std::vector<double>& pressure_pa);

WarmedWeather apply_warming(const HourlyWeather& w, double delta_t_k);

// Deterministic synthetic climatology for tests and fixtures.
HourlyWeather synth_weather(std::uint64_t seed, WeatherProfile profile);

} // namespace coolgrid
