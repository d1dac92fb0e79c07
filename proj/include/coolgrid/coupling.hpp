#pragma once

#include <vector>

#include "coolgrid/demand.hpp"
#include "coolgrid/pvyield.hpp"

namespace coolgrid {

struct SizingResult {
    double capacity_w = 0.0;
    double annual_load_kwh = 0.0;
    double annual_yield_per_w = 0.0; // kWh/W
};

struct StorageSpec {
    double volume_m3 = 1.0;
    double latent_kj_per_kg = 334.0;
    double density_kg_per_m3 = 1000.0;
    double u_value_w_m2k = 0.3;
    double area_m2 = 6.0;
    double t_storage_k = 273.15;
    double discharge_cop = 1.0;

    // 92.78 kWh_th for the defaults.
    double capacity_kwh_th() const {
        return volume_m3 * density_kg_per_m3 * latent_kj_per_kg / 3600.0;
    }
};

struct StorageResult {
    double storage_fraction = 0.0;
    std::vector<double> unmet_kwh; // hourly electric shortfall after storage
    // Thermal energy ledger: charge - discharge - losses = final SOC.
    double charge_kwh_th = 0.0;
    double discharge_kwh_th = 0.0;
    double loss_kwh_th = 0.0;
    double final_soc_kwh_th = 0.0;
};

struct MatchReport {
    double direct_fraction = 0.0;
    double storage_fraction = 0.0;
    std::vector<std::pair<int, double>> flex_curve;
    double capacity_w = 0.0;
};

inline const std::vector<int> kDefaultWindows = {1, 2, 3, 6, 12, 24, 48, 168, 720, 2190, 8760};

// Capacity so that annual PV production equals annual load.
SizingResult size_pv(const DemandSeries& demand, const YieldSeries& yield);

// Sum of min(demand, pv) over total demand; 1 for zero total demand.
double direct_match(const std::vector<double>& demand, const std::vector<double>& pv);

// Match fraction when surplus may shift freely inside consecutive n-hour blocks.
std::vector<std::pair<int, double>> flexibility_curve(const std::vector<double>& demand,
                                                      const std::vector<double>& pv,
                                                      const std::vector<int>& windows);

// Carnot COP for freezing the storage, sink at t_storage - dT2.
std::vector<double> cop_storage_hourly(const std::vector<double>& temperature_k,
                                       const CopParams& cop, const StorageSpec& spec,
                                       const DemandParams& params);

// Rule-based hourly ice-storage dispatch. Per hour: standby loss, then charge
// from PV surplus or discharge against the thermal deficit.
StorageResult simulate_storage(const std::vector<double>& demand_kwh,
                               const std::vector<double>& pv_kwh,
                               const std::vector<double>& cop,
                               const std::vector<double>& cop_storage,
                               const StorageSpec& spec, double n_households,
                               double t_base_k);

} // namespace coolgrid
