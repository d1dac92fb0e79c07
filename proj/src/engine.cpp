#include "coolgrid/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "csv_util.hpp"

namespace coolgrid {

namespace {

// Fixed-order compensated (Kahan) accumulator for deterministic reductions.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;

    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a_str(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ull) {
    return fnv1a(s.data(), s.size(), h);
}

std::uint64_t hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for checksum: " + path);
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[65536];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        h = fnv1a(buf, static_cast<std::size_t>(in.gcount()), h);
    return h;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

void ModelParams::apply_overrides(const std::map<std::string, double>& overrides) {
    for (const auto& [key, v] : overrides) {
        if (key == "t_base_k") demand.t_base_k = v;
        else if (key == "smax_a") demand.smax_a = v;
        else if (key == "smax_b") demand.smax_b = v;
        else if (key == "avail_slope") demand.avail_slope = v;
        else if (key == "avail_intercept") demand.avail_intercept = v;
        else if (key == "eh_log_coeff") demand.eh_log_coeff = v;
        else if (key == "eh_const") demand.eh_const = v;
        else if (key == "eta_carnot") cop.eta_carnot = v;
        else if (key == "delta_t1_k") cop.delta_t1_k = v;
        else if (key == "delta_t2_k") cop.delta_t2_k = v;
        else if (key == "tilt") pv.tilt_deg = v;
        else if (key == "azimuth") pv.azimuth_deg = v;
        else if (key == "derate") pv.derate = v;
        else if (key == "gamma_p") pv.gamma_p = v;
        else if (key == "albedo") pv.albedo = v;
        else if (key == "cell_temp_a") pv.cell_temp_a = v;
        else if (key == "cell_temp_b") pv.cell_temp_b = v;
        else if (key == "volume_m3") storage.volume_m3 = v;
        else if (key == "latent_kj_per_kg") storage.latent_kj_per_kg = v;
        else if (key == "density_kg_per_m3") storage.density_kg_per_m3 = v;
        else if (key == "u_value_w_m2k") storage.u_value_w_m2k = v;
        else if (key == "area_m2") storage.area_m2 = v;
        else if (key == "t_storage_k") storage.t_storage_k = v;
        else if (key == "discharge_cop") storage.discharge_cop = v;
        else if (key == "cop_2000") efficiency.cop_2000 = v;
        else if (key == "cop_2100") efficiency.cop_2100 = v;
        else if (key == "eta_ca_2000") efficiency.eta_ca_2000 = v;
        else if (key == "eta_ca_2100") efficiency.eta_ca_2100 = v;
        else throw std::runtime_error("unknown parameter override: " + key);
    }
}

std::vector<int> YearRange::years() const {
    if (start > end || stride < 1 || start < 2000 || end > 2100)
        throw std::runtime_error("invalid year range " + std::to_string(start) + ":" +
                                 std::to_string(end) + ":" + std::to_string(stride));
    std::vector<int> out;
    for (int y = start; y <= end; y += stride) out.push_back(y);
    return out;
}

CellYearDetail run_cell_year(const CellYearInputs& in, int year, const ModelParams& params) {
    try {
        CellYearDetail d;
        d.result.cell_id = in.cell->cell_id;
        d.result.year = year;

        const auto warmed = apply_warming(*in.climatology, in.delta_t_k);
        CopParams cop = params.cop;
        cop.eta_carnot = in.eta_ca;

        d.demand = demand_series(*in.cell, warmed, in.socio, cop, params.demand);
        d.result.annual_load_kwh = d.demand.annual_kwh;
        d.result.ac_households = d.demand.ac_households;

        if (d.demand.annual_kwh <= 0.0) {
            d.yield.yield_norm.assign(kHoursPerYear, 0.0);
            return d;
        }

        d.yield = hourly_yield(warmed, in.cell->latitude, in.cell->longitude, params.pv);
        d.sizing = size_pv(d.demand, d.yield);
        d.result.capacity_w = d.sizing.capacity_w;

        std::vector<double> pv_kwh(kHoursPerYear);
        for (int h = 0; h < kHoursPerYear; ++h)
            pv_kwh[h] = d.sizing.capacity_w * d.yield.yield_norm[h];

        d.result.direct_fraction = direct_match(d.demand.hourly_kwh, pv_kwh);

        if (in.storage_enabled) {
            std::vector<double> temp(kHoursPerYear);
            for (int h = 0; h < kHoursPerYear; ++h) temp[h] = warmed.temperature_k(h);
            const auto cop_st = cop_storage_hourly(temp, cop, params.storage, params.demand);
            const auto storage =
                simulate_storage(d.demand.hourly_kwh, pv_kwh, d.demand.cop_hourly, cop_st,
                                 params.storage, d.demand.ac_households, params.demand.t_base_k);
            d.result.storage_fraction = storage.storage_fraction;
        } else {
            d.result.storage_fraction = d.result.direct_fraction;
        }
        return d;
    } catch (const std::exception& e) {
        throw std::runtime_error("cell " + std::to_string(in.cell->cell_id) + ", year " +
                                 std::to_string(year) + ": " + e.what());
    }
}

std::vector<RegionYearRow> aggregate(const std::vector<CellYearResult>& results,
                                     const RegionMap& /*rm*/) {
    struct Acc {
        KahanSum capacity, load, matched_direct, matched_storage, households;
    };
    std::map<std::string, Acc> by_region;

    // Fixed-order reduction: sort by cell_id so parallel producers cannot
    // perturb the floating-point result.
    std::vector<const CellYearResult*> sorted;
    sorted.reserve(results.size());
    for (const auto& r : results) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const CellYearResult* a, const CellYearResult* b) {
                  return a->cell_id < b->cell_id;
              });

    int year = results.empty() ? 0 : results.front().year;
    for (const auto* r : sorted) {
        if (r->region.empty())
            throw std::runtime_error("cell " + std::to_string(r->cell_id) +
                                     ": result has no region assigned");
        if (std::find(region_names().begin(), region_names().end(), r->region) ==
            region_names().end())
            throw std::runtime_error("unknown region name: " + r->region);
        auto& acc = by_region[r->region];
        acc.capacity.add(r->capacity_w);
        acc.load.add(r->annual_load_kwh);
        acc.matched_direct.add(r->direct_fraction * r->annual_load_kwh);
        acc.matched_storage.add(r->storage_fraction * r->annual_load_kwh);
        acc.households.add(r->ac_households);
    }

    std::vector<RegionYearRow> rows;
    Acc global;
    for (const auto& name : region_names()) {
        auto it = by_region.find(name);
        RegionYearRow row;
        row.region = name;
        row.year = year;
        if (it != by_region.end()) {
            const auto& a = it->second;
            row.capacity_w = a.capacity.sum;
            row.annual_load_kwh = a.load.sum;
            row.direct_fraction = a.load.sum > 0.0 ? a.matched_direct.sum / a.load.sum : 0.0;
            row.storage_fraction = a.load.sum > 0.0 ? a.matched_storage.sum / a.load.sum : 0.0;
            global.capacity.add(a.capacity.sum);
            global.load.add(a.load.sum);
            global.matched_direct.add(a.matched_direct.sum);
            global.matched_storage.add(a.matched_storage.sum);
        }
        rows.push_back(std::move(row));
    }
    RegionYearRow g;
    g.region = "Global";
    g.year = year;
    g.capacity_w = global.capacity.sum;
    g.annual_load_kwh = global.load.sum;
    g.direct_fraction = global.load.sum > 0.0 ? global.matched_direct.sum / global.load.sum : 0.0;
    g.storage_fraction =
        global.load.sum > 0.0 ? global.matched_storage.sum / global.load.sum : 0.0;
    rows.push_back(std::move(g));
    return rows;
}

Dataset load_dataset(const std::string& data_dir, const std::string& ssp) {
    namespace fs = std::filesystem;
    Dataset d;
    d.cells = load_cells((fs::path(data_dir) / "cells.csv").string());
    d.trajectories = load_trajectories((fs::path(data_dir) / (ssp + ".csv")).string());
    d.regions = load_regions((fs::path(data_dir) / "regions.csv").string());
    d.countries = load_countries((fs::path(data_dir) / "countries.csv").string());

    for (const auto& c : d.cells) {
        if (!d.regions.count(c.country))
            throw std::runtime_error("cell " + std::to_string(c.cell_id) +
                                     ": country not in region table: " + c.country);
        if (!d.trajectories.by_country.count(c.country))
            throw std::runtime_error("cell " + std::to_string(c.cell_id) +
                                     ": country has no trajectory: " + c.country);
    }

    const auto manifest =
        load_weather_manifest((fs::path(data_dir) / "weather_manifest.csv").string());
    for (const auto& [cell_id, path] : manifest)
        d.weather.emplace(cell_id, load_weather_block(path));
    for (const auto& c : d.cells)
        if (!d.weather.count(c.cell_id))
            throw std::runtime_error("no weather block for cell " + std::to_string(c.cell_id));
    return d;
}

RunTables run_simulation(const RunConfig& cfg, const Dataset& data, const ModelParams& params) {
    ModelParams p = params;
    p.apply_overrides(cfg.overrides);

    const WarmingSchedule warming =
        std::filesystem::exists(cfg.warming) ? load_warming(cfg.warming)
                                             : warming_preset(cfg.warming);

    std::vector<const GridCell*> cells;
    cells.reserve(data.cells.size());
    for (const auto& c : data.cells) cells.push_back(&c);
    std::sort(cells.begin(), cells.end(),
              [](const GridCell* a, const GridCell* b) { return a->cell_id < b->cell_id; });

#ifdef _OPENMP
    if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
#endif

    RunTables tables;
    for (int year : cfg.years.years()) {
        const double delta_t = warming_at(warming, year);
        const auto eff = eta_at(p.efficiency, year);

        std::vector<CellYearResult> results(cells.size());
        std::vector<std::vector<double>> demand_parts(cells.size());
        std::vector<std::vector<double>> pv_parts(cells.size());
        std::string error;

#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
            try {
                const GridCell& cell = *cells[i];
                CellYearInputs in;
                in.cell = &cell;
                in.climatology = &data.weather.at(cell.cell_id);
                auto sample = socio_at(data.trajectories.at(cell.country), year);
                in.socio = sample.socio;
                in.socio.eta_efficiency = eff.eta;
                in.delta_t_k = delta_t;
                in.eta_ca = eff.eta_ca;
                in.storage_enabled = cfg.storage_enabled;

                // Scenario population growth enters as a per-country multiplier.
                GridCell scaled = cell;
                scaled.population *= sample.population_multiplier;
                in.cell = &scaled;

                auto detail = run_cell_year(in, year, p);
                detail.result.region = region_of(data.regions, cell.country);
                results[i] = std::move(detail.result);
                demand_parts[i] = std::move(detail.demand.hourly_kwh);
                pv_parts[i].resize(kHoursPerYear);
                for (int h = 0; h < kHoursPerYear; ++h)
                    pv_parts[i][h] = detail.sizing.capacity_w * detail.yield.yield_norm[h];
            } catch (const std::exception& e) {
#pragma omp critical
                if (error.empty()) error = e.what();
            }
        }
        if (!error.empty()) throw std::runtime_error(error);

        auto rows = aggregate(results, data.regions);
        tables.capacity.insert(tables.capacity.end(), rows.begin(), rows.end());

        // Global flexibility curve on the summed hourly series, fixed cell order.
        std::vector<double> demand_total(kHoursPerYear, 0.0), pv_total(kHoursPerYear, 0.0);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (demand_parts[i].empty()) continue;
            for (int h = 0; h < kHoursPerYear; ++h) {
                demand_total[h] += demand_parts[i][h];
                pv_total[h] += pv_parts[i][h];
            }
        }
        for (const auto& [window, fraction] : flexibility_curve(demand_total, pv_total, cfg.windows))
            tables.flex.push_back(FlexCurveRow{year, window, fraction});
    }

    // Yearly added capacity, floored at zero.
    std::map<std::string, double> prev;
    for (auto& row : tables.capacity) {
        auto it = prev.find(row.region);
        row.added_capacity_w =
            it == prev.end() ? row.capacity_w : std::max(row.capacity_w - it->second, 0.0);
        prev[row.region] = row.capacity_w;
    }
    return tables;
}

void write_reports(const RunTables& tables, const RunConfig& cfg, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    {
        auto out = csv::open_output((fs::path(dir) / "capacity_by_region_year.csv").string());
        out << "region,year,capacity_w,added_capacity_w,annual_load_kwh\n";
        for (const auto& r : tables.capacity)
            out << r.region << ',' << r.year << ',' << fmt(r.capacity_w) << ','
                << fmt(r.added_capacity_w) << ',' << fmt(r.annual_load_kwh) << '\n';
    }
    {
        auto out = csv::open_output((fs::path(dir) / "match_by_region_year.csv").string());
        out << "region,year,direct_fraction,storage_fraction\n";
        for (const auto& r : tables.capacity)
            out << r.region << ',' << r.year << ',' << fmt(r.direct_fraction) << ','
                << fmt(r.storage_fraction) << '\n';
    }
    {
        auto out = csv::open_output((fs::path(dir) / "flex_curve_by_year.csv").string());
        out << "year,window_hours,fraction\n";
        for (const auto& r : tables.flex)
            out << r.year << ',' << r.window_hours << ',' << fmt(r.fraction) << '\n';
    }
    {
        std::string canon;
        canon += "ssp=" + cfg.ssp + "\n";
        canon += "warming=" + cfg.warming + "\n";
        canon += "years=" + std::to_string(cfg.years.start) + ":" + std::to_string(cfg.years.end) +
                 ":" + std::to_string(cfg.years.stride) + "\n";
        canon += "storage=" + std::string(cfg.storage_enabled ? "on" : "off") + "\n";
        for (const auto& [k, v] : cfg.overrides) canon += k + "=" + fmt(v) + "\n";

        auto out = csv::open_output((fs::path(dir) / "run_manifest.txt").string());
        out << "config_hash = " << std::hex << fnv1a_str(canon) << std::dec << "\n";
        out << "ssp = " << cfg.ssp << "\n";
        out << "warming = " << cfg.warming << "\n";
        out << "years = " << cfg.years.start << ":" << cfg.years.end << ":" << cfg.years.stride
            << "\n";
        out << "storage = " << (cfg.storage_enabled ? "on" : "off") << "\n";
        for (const auto& [k, v] : cfg.overrides) out << k << " = " << fmt(v) << "\n";
        if (!cfg.data_dir.empty()) {
            for (const char* name :
                 {"cells.csv", "regions.csv", "countries.csv", "weather_manifest.csv"}) {
                const auto p = fs::path(cfg.data_dir) / name;
                if (fs::exists(p))
                    out << "checksum_" << name << " = " << std::hex << hash_file(p.string())
                        << std::dec << "\n";
            }
        }
    }
}

} // namespace coolgrid
