#include "coolgrid/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "csv_util.hpp"

namespace coolgrid {

const CountryTrajectory& TrajectorySet::at(const std::string& country) const {
    auto it = by_country.find(country);
    if (it == by_country.end())
        throw std::runtime_error("no trajectory for country: " + country);
    return it->second;
}

SocioSample socio_at(const CountryTrajectory& traj, double year) {
    const auto& a = traj.anchors;
    if (a.empty()) throw std::runtime_error("trajectory for " + traj.country + " has no anchors");
    if (year < a.front().year || year > a.back().year)
        throw std::runtime_error("year " + std::to_string(year) + " outside trajectory range [" +
                                 std::to_string(a.front().year) + ", " +
                                 std::to_string(a.back().year) + "] for " + traj.country);

    auto hi = std::lower_bound(a.begin(), a.end(), year,
                               [](const TrajectoryAnchor& x, double y) { return x.year < y; });
    if (hi == a.begin()) hi = std::next(hi);
    const auto lo = std::prev(hi);
    if (hi == a.end()) hi = lo; // year == last anchor

    SocioSample out;
    if (lo == hi || lo->year == hi->year) {
        out.socio.gdp_per_cap = lo->gdp_per_cap;
        out.socio.household_size = lo->household_size;
        out.population_multiplier = lo->population_multiplier;
        return out;
    }
    const double f = (year - lo->year) / static_cast<double>(hi->year - lo->year);
    out.socio.gdp_per_cap =
        std::exp((1.0 - f) * std::log(lo->gdp_per_cap) + f * std::log(hi->gdp_per_cap));
    out.socio.household_size = (1.0 - f) * lo->household_size + f * hi->household_size;
    out.population_multiplier =
        (1.0 - f) * lo->population_multiplier + f * hi->population_multiplier;
    return out;
}

EfficiencyAt eta_at(const EfficiencySchedule& s, double year) {
    const double y = std::clamp(year, 2000.0, 2100.0);
    const double f = (y - 2000.0) / 100.0;
    EfficiencyAt out;
    const double cop = (1.0 - f) * s.cop_2000 + f * s.cop_2100;
    out.eta = s.cop_2000 / cop;
    out.eta_ca = (1.0 - f) * s.eta_ca_2000 + f * s.eta_ca_2100;
    return out;
}

double warming_at(const WarmingSchedule& ws, double year) {
    if (year < 2000.0 || ws.delta_by_year.empty()) return 0.0;
    auto hi = ws.delta_by_year.lower_bound(static_cast<int>(std::ceil(year)));
    if (hi == ws.delta_by_year.end()) return std::prev(hi)->second;
    if (hi == ws.delta_by_year.begin() || hi->first == year) {
        // Before the first listed year, ramp from 0 at 2000.
        if (hi->first == year) return hi->second;
        const double f = (year - 2000.0) / (hi->first - 2000.0);
        return f * hi->second;
    }
    const auto lo = std::prev(hi);
    const double f = (year - lo->first) / static_cast<double>(hi->first - lo->first);
    return (1.0 - f) * lo->second + f * hi->second;
}

const std::string& region_of(const RegionMap& rm, const std::string& country) {
    auto it = rm.find(country);
    if (it == rm.end())
        throw std::runtime_error("country not in region table: " + country);
    return it->second;
}

TrajectorySet load_trajectories(const std::string& path) {
    auto in = csv::open_input(path);
    std::string line;
    if (!csv::getline(in, line) ||
        line != "country,year,gdp_per_cap,pop_multiplier,household_size")
        throw std::runtime_error(
            path + ":1: expected header country,year,gdp_per_cap,pop_multiplier,household_size");

    TrajectorySet set;
    std::size_t line_no = 1;
    while (csv::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = csv::split(line);
        if (f.size() != 5)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 5 fields, got " + std::to_string(f.size()));
        TrajectoryAnchor a;
        a.year = static_cast<int>(csv::to_int(f[1], path, line_no));
        a.gdp_per_cap = csv::to_double(f[2], path, line_no);
        a.population_multiplier = csv::to_double(f[3], path, line_no);
        a.household_size = csv::to_double(f[4], path, line_no);
        if (a.gdp_per_cap <= 0.0 || a.population_multiplier <= 0.0 || a.household_size <= 0.0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": trajectory values must be positive");
        auto& traj = set.by_country[f[0]];
        traj.country = f[0];
        if (!traj.anchors.empty() && traj.anchors.back().year >= a.year)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": anchor years must be strictly increasing for " + f[0]);
        traj.anchors.push_back(a);
    }
    for (const auto& [country, traj] : set.by_country)
        if (traj.anchors.size() < 2)
            throw std::runtime_error(path + ": country " + country +
                                     " needs at least two anchors");
    return set;
}

WarmingSchedule load_warming(const std::string& path) {
    auto in = csv::open_input(path);
    std::string line;
    if (!csv::getline(in, line) || line != "year,delta_k")
        throw std::runtime_error(path + ":1: expected header year,delta_k");

    WarmingSchedule ws;
    ws.name = path;
    std::size_t line_no = 1;
    while (csv::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = csv::split(line);
        if (f.size() != 2)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 2 fields, got " + std::to_string(f.size()));
        ws.delta_by_year[static_cast<int>(csv::to_int(f[0], path, line_no))] =
            csv::to_double(f[1], path, line_no);
    }
    return ws;
}

RegionMap load_regions(const std::string& path) {
    auto in = csv::open_input(path);
    std::string line;
    if (!csv::getline(in, line) || line != "country,region")
        throw std::runtime_error(path + ":1: expected header country,region");

    const auto& names = region_names();
    RegionMap rm;
    std::size_t line_no = 1;
    while (csv::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = csv::split(line);
        if (f.size() != 2)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 2 fields, got " + std::to_string(f.size()));
        if (std::find(names.begin(), names.end(), f[1]) == names.end())
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": unknown region name: " + f[1]);
        if (!rm.emplace(f[0], f[1]).second)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": duplicate country: " + f[0]);
    }
    return rm;
}

std::vector<CountryInfo> load_countries(const std::string& path) {
    auto in = csv::open_input(path);
    std::string line;
    if (!csv::getline(in, line) || line != "country,name,population_2010")
        throw std::runtime_error(path + ":1: expected header country,name,population_2010");

    std::vector<CountryInfo> out;
    std::size_t line_no = 1;
    while (csv::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = csv::split(line);
        if (f.size() != 3)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 3 fields, got " + std::to_string(f.size()));
        CountryInfo c;
        c.code = f[0];
        c.name = f[1];
        c.population_2010 = csv::to_double(f[2], path, line_no);
        if (c.population_2010 < 0.0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": negative population");
        out.push_back(std::move(c));
    }
    return out;
}

WarmingSchedule warming_preset(const std::string& name) {
    double end_of_century = 0.0;
    if (name == "rcp3") end_of_century = 1.8;
    else if (name == "rcp45") end_of_century = 2.5;
    else if (name == "rcp85") end_of_century = 4.5;
    else if (name == "rcp85-low") end_of_century = 3.8;
    else if (name == "none") end_of_century = 0.0;
    else throw std::runtime_error("unknown warming preset: " + name);

    WarmingSchedule ws;
    ws.name = name;
    ws.delta_by_year[2000] = 0.0;
    ws.delta_by_year[2100] = end_of_century;
    return ws;
}

const std::vector<std::string>& region_names() {
    static const std::vector<std::string> names = {
        "Centrally Planned Asia",
        "Europe & Former Soviet Union",
        "Latin America",
        "Middle East & North Africa",
        "North America",
        "Oceania & Pacific Asia",
        "South Asia",
        "Sub-Saharan Africa",
    };
    return names;
}

} // namespace coolgrid
