#pragma once

#include "coolgrid/engine.hpp"

namespace coolgrid::reference {

// Naive straight-line re-implementation of the per-cell pipeline, loops only.
// Kept independent of the library code paths so it can serve as an oracle for
// the optimized engine and as the serial baseline in the benchmark.
CellYearResult cell_year(const GridCell& cell, const HourlyWeather& climatology,
                         const SocioState& socio, double delta_t_k, double eta_ca,
                         int year, const ModelParams& params);

} // namespace coolgrid::reference
