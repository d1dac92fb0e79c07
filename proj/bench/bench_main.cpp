// Timing comparison: serial straight-line implementation vs the parallel
// engine, on a synthetic grid. Usage: coolgrid_bench [n_cells] [repeats]
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "coolgrid/engine.hpp"
#include "coolgrid/reference.hpp"

using namespace coolgrid;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int n_cells = argc > 1 ? std::atoi(argv[1]) : 256;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (n_cells < 1 || repeats < 1) {
        std::fprintf(stderr, "usage: coolgrid_bench [n_cells] [repeats]\n");
        return 2;
    }

    const WeatherProfile profiles[] = {WeatherProfile::Equatorial, WeatherProfile::Subtropical,
                                       WeatherProfile::Temperate};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> gdp_dist(3000.0, 60000.0);
    std::uniform_real_distribution<double> pop_dist(5.0e4, 2.0e6);

    std::vector<GridCell> cells(n_cells);
    std::vector<HourlyWeather> weather(n_cells);
    std::vector<SocioState> socio(n_cells);
    for (int i = 0; i < n_cells; ++i) {
        const auto profile = profiles[i % 3];
        const double lat = profile == WeatherProfile::Equatorial ? 5.0
                           : profile == WeatherProfile::Subtropical ? 25.0
                                                                    : 45.0;
        cells[i] = GridCell{i + 1, lat, -120.0 + i * 0.1, "XXX", pop_dist(rng)};
        weather[i] = synth_weather(1000 + i, profile);
        socio[i] = SocioState{gdp_dist(rng), 3.0, 0.8};
    }

    const ModelParams params;
    const int year = 2050;
    const double delta_t = 1.2;
    const double eta_ca = 0.2;

    std::printf("cells: %d, repeats: %d\n", n_cells, repeats);

    double serial_best = 1e300;
    double serial_check = 0.0;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock_type::now();
        double acc = 0.0;
        for (int i = 0; i < n_cells; ++i) {
            const auto res =
                reference::cell_year(cells[i], weather[i], socio[i], delta_t, eta_ca, year, params);
            acc += res.annual_load_kwh + res.capacity_w;
        }
        serial_best = std::min(serial_best, seconds_since(t0));
        serial_check = acc;
    }
    std::printf("serial reference: %.3f s (best of %d), checksum %.6e\n", serial_best, repeats,
                serial_check);

    double parallel_best = 1e300;
    double parallel_check = 0.0;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock_type::now();
        std::vector<double> acc(n_cells, 0.0);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n_cells; ++i) {
            CellYearInputs in;
            in.cell = &cells[i];
            in.climatology = &weather[i];
            in.socio = socio[i];
            in.delta_t_k = delta_t;
            in.eta_ca = eta_ca;
            const auto d = run_cell_year(in, year, params);
            acc[i] = d.result.annual_load_kwh + d.result.capacity_w;
        }
        double sum = 0.0;
        for (double v : acc) sum += v;
        parallel_best = std::min(parallel_best, seconds_since(t0));
        parallel_check = sum;
    }
    std::printf("parallel engine:  %.3f s (best of %d), checksum %.6e\n", parallel_best, repeats,
                parallel_check);
    std::printf("speedup: %.2fx\n", serial_best / parallel_best);

    const double rel = std::abs(serial_check - parallel_check) /
                       std::max(std::abs(serial_check), 1.0);
    if (rel > 1e-9) {
        std::fprintf(stderr, "checksum mismatch between implementations: rel %.3e\n", rel);
        return 1;
    }
    return 0;
}
