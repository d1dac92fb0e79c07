// Writes the 4-cell synthetic sample dataset (cells + weather blocks).
// Usage: coolgrid-make-fixture <output-dir> [seed]

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "coolgrid/geogrid.hpp"

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: coolgrid-make-fixture <output-dir> [seed]\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 42;

    try {
        std::filesystem::create_directories(dir);

        using coolgrid::WeatherProfile;
        struct Spec {
            std::int64_t id;
            double lat, lon;
            const char* country;
            double population;
            WeatherProfile profile;
        };
        const Spec specs[] = {
            {1, 5.0, 103.8, "SGP", 1.0e6, WeatherProfile::Equatorial},
            {2, 25.0, 30.5, "EGY", 2.0e6, WeatherProfile::Subtropical},
            {3, 45.0, -93.2, "USA", 3.0e6, WeatherProfile::Temperate},
            {4, 45.0, 10.0, "DEU", 5.0e5, WeatherProfile::Temperate},
        };

        std::vector<coolgrid::GridCell> cells;
        std::string manifest = "cell_id,path\n";
        for (const auto& s : specs) {
            cells.push_back({s.id, s.lat, s.lon, s.country, s.population});
            const auto w = coolgrid::synth_weather(seed + static_cast<std::uint64_t>(s.id),
                                                   s.profile);
            const std::string block = "weather_cell_" + std::to_string(s.id) + ".csv";
            coolgrid::write_weather_block(w, (dir / block).string());
            manifest += std::to_string(s.id) + "," + block + "\n";
        }
        coolgrid::write_cells(cells, (dir / "cells.csv").string());
        std::ofstream((dir / "weather_manifest.csv").string()) << manifest;

        // Minimal scenario tables covering the fixture countries, so the
        // directory is a complete, loadable dataset on its own.
        struct Socio {
            const char* country;
            double gdp_2010, gdp_2050, gdp_2100;
            double mult_2050, mult_2100;
            double hh_2010, hh_2100;
            const char* region;
            const char* name;
            double pop_2010;
        };
        const Socio socio[] = {
            {"SGP", 52000, 95000, 150000, 1.15, 1.10, 3.5, 2.8,
             "Oceania & Pacific Asia", "Singapore", 5.08e6},
            {"EGY", 5900, 16000, 45000, 1.55, 1.90, 4.1, 3.0,
             "Middle East & North Africa", "Egypt", 7.81e7},
            {"USA", 42000, 70000, 115000, 1.25, 1.40, 2.6, 2.3,
             "North America", "United States", 3.09e8},
            {"DEU", 35000, 55000, 90000, 0.98, 0.90, 2.0, 1.9,
             "Europe & Former Soviet Union", "Germany", 8.18e7},
        };
        for (const char* ssp : {"ssp2", "ssp3", "ssp5"}) {
            std::ofstream out((dir / (std::string(ssp) + ".csv")).string());
            out << "country,year,gdp_per_cap,pop_multiplier,household_size\n";
            for (const auto& s : socio) {
                out << s.country << ",2010," << s.gdp_2010 << ",1.0," << s.hh_2010 << "\n";
                out << s.country << ",2050," << s.gdp_2050 << "," << s.mult_2050 << ","
                    << 0.5 * (s.hh_2010 + s.hh_2100) << "\n";
                out << s.country << ",2100," << s.gdp_2100 << "," << s.mult_2100 << ","
                    << s.hh_2100 << "\n";
            }
        }
        {
            std::ofstream regions((dir / "regions.csv").string());
            regions << "country,region\n";
            for (const auto& s : socio) regions << s.country << "," << s.region << "\n";
            std::ofstream countries((dir / "countries.csv").string());
            countries << "country,name,population_2010\n";
            for (const auto& s : socio)
                countries << s.country << "," << s.name << "," << s.pop_2010 << "\n";
        }
        std::cout << "wrote fixture to " << dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
