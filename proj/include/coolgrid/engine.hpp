#pragma once

#include <map>
#include <string>
#include <vector>

#include "coolgrid/coupling.hpp"
#include "coolgrid/scenario.hpp"

namespace coolgrid {

struct ModelParams {
    DemandParams demand;
    CopParams cop;
    PvConfig pv;
    StorageSpec storage;
    EfficiencySchedule efficiency;

    // Overrides keyed by the parameter field name (e.g. "t_base_k", "derate").
    void apply_overrides(const std::map<std::string, double>& overrides);
};

struct YearRange {
    int start = 2010;
    int end = 2100;
    int stride = 5;

    std::vector<int> years() const;
};

struct RunConfig {
    std::string data_dir;
    std::string output_dir;
    std::string ssp = "ssp2";
    std::string warming = "rcp45"; // preset name or CSV path
    YearRange years;
    std::vector<int> windows = kDefaultWindows;
    bool storage_enabled = true;
    int workers = 0; // 0 = machine parallelism
    std::map<std::string, double> overrides;
};

struct CellYearResult {
    std::int64_t cell_id = 0;
    int year = 0;
    double annual_load_kwh = 0.0;
    double capacity_w = 0.0;
    double direct_fraction = 0.0;
    double storage_fraction = 0.0;
    double ac_households = 0.0;
    std::string region;
};

struct RegionYearRow {
    std::string region;
    int year = 0;
    double capacity_w = 0.0;
    double added_capacity_w = 0.0;
    double annual_load_kwh = 0.0;
    double direct_fraction = 0.0;
    double storage_fraction = 0.0;
};

struct FlexCurveRow {
    int year = 0;
    int window_hours = 0;
    double fraction = 0.0;
};

struct RunTables {
    std::vector<RegionYearRow> capacity; // per region + "Global", per year
    std::vector<FlexCurveRow> flex;
};

struct CellYearInputs {
    const GridCell* cell = nullptr;
    const HourlyWeather* climatology = nullptr;
    SocioState socio;
    double delta_t_k = 0.0;
    double eta_ca = 0.16;
    bool storage_enabled = true;
};

// Full per-cell pipeline: warming -> demand -> yield -> sizing -> match ->
// storage. Also returns the hourly series so callers can aggregate them.
struct CellYearDetail {
    CellYearResult result;
    DemandSeries demand;
    YieldSeries yield;
    SizingResult sizing;
};

CellYearDetail run_cell_year(const CellYearInputs& in, int year, const ModelParams& params);

// Load-weighted region/global aggregation for one year; fractions are combined
// from summed numerators and denominators, never averaged.
std::vector<RegionYearRow> aggregate(const std::vector<CellYearResult>& results,
                                     const RegionMap& rm);

struct Dataset {
    std::vector<GridCell> cells;
    std::map<std::int64_t, HourlyWeather> weather; // by cell_id
    TrajectorySet trajectories;
    RegionMap regions;
    std::vector<CountryInfo> countries;
};

Dataset load_dataset(const std::string& data_dir, const std::string& ssp);

// Runs the configured sweep; parallel over cells, deterministic reduction.
RunTables run_simulation(const RunConfig& cfg, const Dataset& data, const ModelParams& params);

// capacity_by_region_year.csv, match_by_region_year.csv, flex_curve_by_year.csv
// and run_manifest.txt; byte-deterministic for identical inputs.
void write_reports(const RunTables& tables, const RunConfig& cfg, const std::string& dir);

} // namespace coolgrid
