#pragma once

#include <map>
#include <string>
#include <vector>

#include "coolgrid/demand.hpp"

namespace coolgrid {

struct TrajectoryAnchor {
    int year = 0;
    double gdp_per_cap = 0.0;
    double population_multiplier = 1.0;
    double household_size = 1.0;
};

struct CountryTrajectory {
    std::string country;
    std::vector<TrajectoryAnchor> anchors; // years strictly increasing
};

struct SocioSample {
    SocioState socio;
    double population_multiplier = 1.0;
};

struct EfficiencySchedule {
    double cop_2000 = 2.4;
    double cop_2100 = 4.39;
    double eta_ca_2000 = 0.16;
    double eta_ca_2100 = 0.29;
};

struct EfficiencyAt {
    double eta = 1.0;    // cop_2000 / cop(year)
    double eta_ca = 0.16;
};

struct WarmingSchedule {
    std::string name;
    std::map<int, double> delta_by_year; // year -> kelvin offset
};

// country ISO-3 -> region name
using RegionMap = std::map<std::string, std::string>;

struct CountryInfo {
    std::string code;
    std::string name;
    double population_2010 = 0.0;
};

struct TrajectorySet {
    std::map<std::string, CountryTrajectory> by_country;

    const CountryTrajectory& at(const std::string& country) const;
};

// GDP interpolates geometrically, population multiplier and household size
// linearly; eta fields are left at defaults (filled in by the caller).
SocioSample socio_at(const CountryTrajectory& traj, double year);

EfficiencyAt eta_at(const EfficiencySchedule& s, double year);

// Linear interpolation in the table; 0 before 2000, clamped after the last year.
double warming_at(const WarmingSchedule& ws, double year);

const std::string& region_of(const RegionMap& rm, const std::string& country);

// CSV loaders; formats documented in the README.
TrajectorySet load_trajectories(const std::string& path);
WarmingSchedule load_warming(const std::string& path);
RegionMap load_regions(const std::string& path);
std::vector<CountryInfo> load_countries(const std::string& path);

// Named presets: linear ramps 0 K at 2000 to the end-of-century offset.
// rcp3 -> 1.8, rcp45 -> 2.5, rcp85 -> 4.5, rcp85-low -> 3.8.
WarmingSchedule warming_preset(const std::string& name);

// The eight canonical region names.
const std::vector<std::string>& region_names();

} // namespace coolgrid
