#include "coolgrid/geogrid.hpp"

#include <cmath>
#include <filesystem>
#include <random>
#include <set>
#include <stdexcept>

#include "csv_util.hpp"

namespace coolgrid {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_series(const std::vector<double>& s, const char* name, double lo, double hi,
                  const std::string& context) {
    if (s.size() != kHoursPerYear)
        throw std::runtime_error(context + name + ": expected 8760 values, got " +
                                 std::to_string(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] >= lo && s[i] <= hi))
            throw std::runtime_error(context + name + " out of range at hour " +
                                     std::to_string(i) + ": " + std::to_string(s[i]));
    }
}

} // namespace

void HourlyWeather::validate(const std::string& context) const {
    std::string ctx = context.empty() ? std::string{} : context + ": ";
    check_series(temperature_k, "temp_K", 150.0, 350.0, ctx);
    check_series(ghi_wm2, "ghi_Wm2", 0.0, 2000.0, ctx);
    check_series(wind_ms, "wind_ms", 0.0, 150.0, ctx);
    check_series(pressure_pa, "pressure_Pa", 1.0, 200000.0, ctx);
}

WeatherProfile parse_profile(const std::string& name) {
    if (name == "equatorial") return WeatherProfile::Equatorial;
    if (name == "subtropical") return WeatherProfile::Subtropical;
    if (name == "temperate") return WeatherProfile::Temperate;
    if (name == "constant") return WeatherProfile::Constant;
    throw std::runtime_error("unknown weather profile: " + name);
}

double profile_latitude(WeatherProfile profile) {
    switch (profile) {
        case WeatherProfile::Equatorial: return 5.0;
        case WeatherProfile::Subtropical: return 25.0;
        case WeatherProfile::Temperate: return 45.0;
        case WeatherProfile::Constant: return 15.0;
    }
    return 0.0;
}

std::vector<GridCell> load_cells(const std::string& path) {
    auto in = csv::open_input(path);
    std::string line;
    if (!csv::getline(in, line) || line != "cell_id,lat,lon,country,population")
        throw std::runtime_error(path + ":1: expected header cell_id,lat,lon,country,population");

    std::vector<GridCell> cells;
    std::set<std::int64_t> seen;
    std::size_t line_no = 1;
    while (csv::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = csv::split(line);
        if (f.size() != 5)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 5 fields, got " + std::to_string(f.size()));
        GridCell c;
        c.cell_id = csv::to_int(f[0], path, line_no);
        c.latitude = csv::to_double(f[1], path, line_no);
        c.longitude = csv::to_double(f[2], path, line_no);
        c.country = f[3];
        c.population = csv::to_double(f[4], path, line_no);

        if (c.latitude < -90.0 || c.latitude > 90.0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": latitude out of range: " + f[1]);
        if (c.longitude < -180.0 || c.longitude >= 180.0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": longitude out of range: " + f[2]);
        if (c.population < 0.0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": negative population: " + f[4]);
        if (c.country.empty())
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": empty country code");
        if (!seen.insert(c.cell_id).second)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": duplicate cell_id " + std::to_string(c.cell_id));
        cells.push_back(std::move(c));
    }
    return cells;
}

void write_cells(const std::vector<GridCell>& cells, const std::string& path) {
    auto out = csv::open_output(path);
    out << "cell_id,lat,lon,country,population\n";
    out.precision(17);
    for (const auto& c : cells)
        out << c.cell_id << ',' << c.latitude << ',' << c.longitude << ','
            << c.country << ',' << c.population << '\n';
}

HourlyWeather load_weather_block(const std::string& path) {
    auto in = csv::open_input(path);
    std::string line;
    if (!csv::getline(in, line) || line != "temp_K,ghi_Wm2,wind_ms,pressure_Pa")
        throw std::runtime_error(path + ":1: expected header temp_K,ghi_Wm2,wind_ms,pressure_Pa");

    HourlyWeather w;
    w.temperature_k.reserve(kHoursPerYear);
    w.ghi_wm2.reserve(kHoursPerYear);
    w.wind_ms.reserve(kHoursPerYear);
    w.pressure_pa.reserve(kHoursPerYear);
    std::size_t line_no = 1;
    while (csv::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = csv::split(line);
        if (f.size() != 4)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 4 fields, got " + std::to_string(f.size()));
        w.temperature_k.push_back(csv::to_double(f[0], path, line_no));
        w.ghi_wm2.push_back(csv::to_double(f[1], path, line_no));
        w.wind_ms.push_back(csv::to_double(f[2], path, line_no));
        w.pressure_pa.push_back(csv::to_double(f[3], path, line_no));
    }
    w.validate(path);
    return w;
}

void write_weather_block(const HourlyWeather& w, const std::string& path) {
    auto out = csv::open_output(path);
    out << "temp_K,ghi_Wm2,wind_ms,pressure_Pa\n";
    out.precision(17);
    for (int h = 0; h < kHoursPerYear; ++h)
        out << w.temperature_k[h] << ',' << w.ghi_wm2[h] << ',' << w.wind_ms[h]
            << ',' << w.pressure_pa[h] << '\n';
}

std::vector<std::pair<std::int64_t, std::string>> load_weather_manifest(const std::string& path) {
    auto in = csv::open_input(path);
    std::string line;
    if (!csv::getline(in, line) || line != "cell_id,path")
        throw std::runtime_error(path + ":1: expected header cell_id,path");

    auto base = std::filesystem::path(path).parent_path();
    std::vector<std::pair<std::int64_t, std::string>> entries;
    std::size_t line_no = 1;
    while (csv::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = csv::split(line);
        if (f.size() != 2)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 2 fields, got " + std::to_string(f.size()));
        entries.emplace_back(csv::to_int(f[0], path, line_no), (base / f[1]).string());
    }
    return entries;
}

HourlyWeather build_climatology(const std::vector<double>& temperature_k,
                                const std::vector<double>& ghi_wm2,
                                const std::vector<double>& wind_ms,
                                const std::vector<double>& pressure_pa) {
    const std::size_t n = temperature_k.size();
    if (n == 0 || n % kHoursPerYear != 0)
        throw std::runtime_error("climatology input length " + std::to_string(n) +
                                 " is not a positive multiple of 8760");
    if (ghi_wm2.size() != n || wind_ms.size() != n || pressure_pa.size() != n)
        throw std::runtime_error("climatology input series have mismatched lengths");

    const std::size_t years = n / kHoursPerYear;
    auto mean_of = [&](const std::vector<double>& s, int h) {
        double sum = 0.0;
        for (std::size_t y = 0; y < years; ++y) sum += s[y * kHoursPerYear + h];
        return sum / static_cast<double>(years);
    };

    HourlyWeather w;
    w.temperature_k.resize(kHoursPerYear);
    w.ghi_wm2.resize(kHoursPerYear);
    w.wind_ms.resize(kHoursPerYear);
    w.pressure_pa.resize(kHoursPerYear);
    for (int h = 0; h < kHoursPerYear; ++h) {
        w.temperature_k[h] = mean_of(temperature_k, h);
        w.ghi_wm2[h] = mean_of(ghi_wm2, h);
        w.wind_ms[h] = mean_of(wind_ms, h);
        w.pressure_pa[h] = mean_of(pressure_pa, h);
    }
    return w;
}

WarmedWeather apply_warming(const HourlyWeather& w, double delta_t_k) {
    if (!std::isfinite(delta_t_k))
        throw std::runtime_error("warming offset must be finite");
    return WarmedWeather{w, delta_t_k};
}

HourlyWeather synth_weather(std::uint64_t seed, WeatherProfile profile) {
    const double lat = profile_latitude(profile);

    HourlyWeather w;
    w.temperature_k.resize(kHoursPerYear);
    w.ghi_wm2.resize(kHoursPerYear);
    w.wind_ms.resize(kHoursPerYear);
    w.pressure_pa.resize(kHoursPerYear);

    if (profile == WeatherProfile::Constant) {
        for (int h = 0; h < kHoursPerYear; ++h) {
            const int hod = h % 24;
            w.temperature_k[h] = 303.15;
            w.ghi_wm2[h] = hod >= 6 && hod <= 18
                               ? 950.0 * std::max(0.0, std::sin(kPi * (hod - 6) / 12.0))
                               : 0.0;
            w.wind_ms[h] = 1.0;
            w.pressure_pa[h] = 101325.0;
        }
        return w;
    }

    double t_mean = 0.0, seasonal_amp = 0.0, diurnal_amp = 0.0;
    switch (profile) {
        case WeatherProfile::Equatorial:
            t_mean = 300.15; seasonal_amp = 0.8; diurnal_amp = 4.0;
            break;
        case WeatherProfile::Subtropical:
            t_mean = 297.15; seasonal_amp = 6.0; diurnal_amp = 6.0;
            break;
        case WeatherProfile::Temperate:
            t_mean = 285.15; seasonal_amp = 11.0; diurnal_amp = 5.0;
            break;
        default: break;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cloud_dist(0.6, 1.0);
    std::uniform_real_distribution<double> temp_noise(-0.3, 0.3);
    std::uniform_real_distribution<double> wind_dist(1.5, 4.5);

    const double lat_rad = lat * kPi / 180.0;
    for (int d = 0; d < 365; ++d) {
        const double cloud = cloud_dist(rng);
        const double t_off = temp_noise(rng);
        const double wind = wind_dist(rng);
        // Northern-hemisphere thermal peak in mid-July (day 196).
        const double season = std::cos(2.0 * kPi * (d - 196) / 365.0);
        const double decl = 0.409 * std::sin(2.0 * kPi * (284.0 + d + 1) / 365.0);
        for (int hod = 0; hod < 24; ++hod) {
            const int h = d * 24 + hod;
            // Temperature lags insolation, peaking at 15:00.
            const double diurnal = std::cos(2.0 * kPi * (hod - 15) / 24.0);
            w.temperature_k[h] = t_mean + seasonal_amp * season + diurnal_amp * diurnal + t_off;

            const double hour_angle = (hod - 12) * 15.0 * kPi / 180.0;
            const double cosz = std::sin(lat_rad) * std::sin(decl) +
                                std::cos(lat_rad) * std::cos(decl) * std::cos(hour_angle);
            w.ghi_wm2[h] = cosz > 0.0
                               ? 1050.0 * cosz * std::exp(-0.1 / std::max(cosz, 0.05)) * cloud
                               : 0.0;
            w.wind_ms[h] = wind;
            w.pressure_pa[h] = 101325.0;
        }
    }
    return w;
}

} // namespace coolgrid
