#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coolgrid/engine.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using coolgrid::RunConfig;

coolgrid::YearRange parse_years(const std::string& spec) {
    coolgrid::YearRange r;
    std::vector<int> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(std::stoi(tok));
    if (parts.size() < 2 || parts.size() > 3)
        throw CLI::ValidationError("--years", "expected start:end[:stride], got '" + spec + "'");
    r.start = parts[0];
    r.end = parts[1];
    r.stride = parts.size() == 3 ? parts[2] : 1;
    if (r.start > r.end || r.stride < 1)
        throw CLI::ValidationError("--years", "empty or invalid range '" + spec + "'");
    return r;
}

std::vector<int> parse_windows(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw CLI::ValidationError("--windows", "empty window list");
    return out;
}

// Flat `key = value` config file; flags given on the command line win.
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw CLI::ValidationError("--config", path + ":" + std::to_string(line_no) +
                                                           ": expected key = value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::string default_data_dir() {
    const char* env = std::getenv("COOLGRID_DATA");
    return env ? env : "data/sample";
}

coolgrid::ModelParams params_for(const RunConfig& cfg) {
    coolgrid::ModelParams p;
    p.apply_overrides(cfg.overrides);
    return p;
}

int cmd_validate(const RunConfig& cfg) {
    const auto data = coolgrid::load_dataset(cfg.data_dir, cfg.ssp);
    double population = 0.0;
    for (const auto& c : data.cells) population += c.population;
    std::cout << "cells: " << data.cells.size() << "\n";
    std::cout << "population: " << population << "\n";
    std::cout << "weather blocks: " << data.weather.size() << "\n";
    std::cout << "countries with trajectories: " << data.trajectories.by_country.size() << "\n";
    std::cout << "countries in region table: " << data.regions.size() << "\n";
    std::cout << "validation OK\n";
    return 0;
}

int cmd_run(const RunConfig& cfg) {
    const auto data = coolgrid::load_dataset(cfg.data_dir, cfg.ssp);
    const auto tables = coolgrid::run_simulation(cfg, data, params_for(cfg));
    coolgrid::write_reports(tables, cfg, cfg.output_dir);
    std::cout << "wrote reports to " << cfg.output_dir << "\n";
    return 0;
}

int cmd_cell(const RunConfig& cfg, std::int64_t cell_id, int year) {
    const auto data = coolgrid::load_dataset(cfg.data_dir, cfg.ssp);
    const coolgrid::GridCell* cell = nullptr;
    for (const auto& c : data.cells)
        if (c.cell_id == cell_id) cell = &c;
    if (!cell) {
        std::cerr << "no such cell: " << cell_id << "\n";
        return 1;
    }

    coolgrid::ModelParams params = params_for(cfg);
    const auto warming = std::filesystem::exists(cfg.warming)
                             ? coolgrid::load_warming(cfg.warming)
                             : coolgrid::warming_preset(cfg.warming);
    const auto eff = coolgrid::eta_at(params.efficiency, year);
    auto sample = coolgrid::socio_at(data.trajectories.at(cell->country), year);

    coolgrid::GridCell scaled = *cell;
    scaled.population *= sample.population_multiplier;

    coolgrid::CellYearInputs in;
    in.cell = &scaled;
    in.climatology = &data.weather.at(cell->cell_id);
    in.socio = sample.socio;
    in.socio.eta_efficiency = eff.eta;
    in.delta_t_k = coolgrid::warming_at(warming, year);
    in.eta_ca = eff.eta_ca;
    in.storage_enabled = cfg.storage_enabled;

    const auto d = coolgrid::run_cell_year(in, year, params);
    std::cout << "cell " << cell_id << " (" << cell->country << ", lat " << cell->latitude
              << ", lon " << cell->longitude << "), year " << year << "\n";
    std::cout << "population: " << scaled.population << "\n";
    std::cout << "cdd_annual: " << d.demand.cdd_annual << "\n";
    std::cout << "ac_households: " << d.result.ac_households << "\n";
    std::cout << "annual_load_kwh: " << d.result.annual_load_kwh << "\n";
    std::cout << "capacity_w: " << d.result.capacity_w << "\n";
    std::cout << "direct_fraction: " << d.result.direct_fraction << "\n";
    std::cout << "storage_fraction: " << d.result.storage_fraction << "\n";
    return 0;
}

int cmd_flex(const RunConfig& cfg) {
    const auto data = coolgrid::load_dataset(cfg.data_dir, cfg.ssp);
    const auto tables = coolgrid::run_simulation(cfg, data, params_for(cfg));

    std::filesystem::create_directories(cfg.output_dir);
    const auto path = std::filesystem::path(cfg.output_dir) / "flex_curve_by_year.csv";
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 1;
    }
    out << "year,window_hours,fraction\n";
    out.precision(10);
    for (const auto& row : tables.flex)
        out << row.year << ',' << row.window_hours << ',' << row.fraction << '\n';
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coolgrid: gridded residential cooling demand vs PV simulator"};
    app.name("coolgrid");
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.data_dir = default_data_dir();
    std::string config_path, years_spec, windows_spec;
    std::vector<std::string> set_flags;
    bool no_storage = false;
    std::int64_t cell_id = 0;
    int cell_year = 2010;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--data", cfg.data_dir, "Data directory (default $COOLGRID_DATA)");
        sub->add_option("--config", config_path, "Flat key=value config file");
        sub->add_option("--ssp", cfg.ssp, "Socioeconomic scenario: ssp2|ssp3|ssp5");
        sub->add_option("--warming", cfg.warming,
                        "Warming preset (rcp3|rcp45|rcp85|rcp85-low|none) or CSV file");
        sub->add_option("--set", set_flags, "Model parameter override key=value (repeatable)");
        sub->add_flag("--no-storage", no_storage, "Disable the thermal storage simulation");
        sub->add_option("--workers", cfg.workers, "Worker threads (0 = machine parallelism)");
        return sub;
    };

    auto* validate = add_common(app.add_subcommand("validate", "Check all input files"));
    auto* run = add_common(app.add_subcommand("run", "Run the scenario sweep and write reports"));
    run->add_option("--out", cfg.output_dir, "Output directory")->required();
    run->add_option("--years", years_spec, "Year range start:end[:stride]");
    run->add_option("--windows", windows_spec, "Flexibility windows, comma-separated hours");
    auto* cell = add_common(app.add_subcommand("cell", "Inspect a single cell-year"));
    cell->add_option("--id", cell_id, "Cell id")->required();
    cell->add_option("--year", cell_year, "Simulation year");
    auto* flex = add_common(app.add_subcommand("flex", "Write the flexibility-window curve"));
    flex->add_option("--out", cfg.output_dir, "Output directory")->required();
    flex->add_option("--years", years_spec, "Year range start:end[:stride]");
    flex->add_option("--windows", windows_spec, "Flexibility windows, comma-separated hours");
    app.add_subcommand("version", "Print version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();

        // Config file supplies defaults; explicit flags win.
        if (!config_path.empty()) {
            auto kv = load_config_file(config_path);
            auto take = [&](const char* flag, const char* key, auto apply) {
                if (kv.count(key) && !sub->count(flag)) apply(kv.at(key));
                kv.erase(key);
            };
            take("--data", "data", [&](const std::string& v) { cfg.data_dir = v; });
            take("--ssp", "ssp", [&](const std::string& v) { cfg.ssp = v; });
            take("--warming", "warming", [&](const std::string& v) { cfg.warming = v; });
            take("--years", "years", [&](const std::string& v) { years_spec = v; });
            take("--windows", "windows", [&](const std::string& v) { windows_spec = v; });
            take("--workers", "workers", [&](const std::string& v) { cfg.workers = std::stoi(v); });
            take("--no-storage", "storage",
                 [&](const std::string& v) { no_storage = (v == "off" || v == "0"); });
            for (const auto& [k, v] : kv) cfg.overrides[k] = std::stod(v);
        }
        for (const auto& s : set_flags) {
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("--set expects key=value, got '" + s + "'");
            cfg.overrides[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
        }
        if (!years_spec.empty()) cfg.years = parse_years(years_spec);
        if (!windows_spec.empty()) cfg.windows = parse_windows(windows_spec);
        cfg.storage_enabled = !no_storage;

        if (sub == validate) return cmd_validate(cfg);
        if (sub == run) return cmd_run(cfg);
        if (sub == cell) return cmd_cell(cfg, cell_id, cell_year);
        if (sub == flex) return cmd_flex(cfg);
        std::cout << "coolgrid " << kVersion << "\n";
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
