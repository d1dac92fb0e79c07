#include "coolgrid/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coolgrid {

SizingResult size_pv(const DemandSeries& demand, const YieldSeries& yield) {
    SizingResult out;
    out.annual_load_kwh = std::accumulate(demand.hourly_kwh.begin(), demand.hourly_kwh.end(), 0.0);
    out.annual_yield_per_w =
        std::accumulate(yield.yield_norm.begin(), yield.yield_norm.end(), 0.0);
    if (out.annual_load_kwh <= 0.0) {
        out.capacity_w = 0.0;
        return out;
    }
    if (out.annual_yield_per_w <= 0.0)
        throw std::runtime_error("cannot size PV: positive demand with zero annual yield");
    out.capacity_w = out.annual_load_kwh / out.annual_yield_per_w;
    return out;
}

double direct_match(const std::vector<double>& demand, const std::vector<double>& pv) {
    if (demand.size() != pv.size())
        throw std::runtime_error("demand/pv series length mismatch");
    double matched = 0.0, total = 0.0;
    for (std::size_t h = 0; h < demand.size(); ++h) {
        matched += std::min(demand[h], pv[h]);
        total += demand[h];
    }
    return total > 0.0 ? matched / total : 1.0;
}

std::vector<std::pair<int, double>> flexibility_curve(const std::vector<double>& demand,
                                                      const std::vector<double>& pv,
                                                      const std::vector<int>& windows) {
    if (demand.size() != pv.size())
        throw std::runtime_error("demand/pv series length mismatch");
    const double total = std::accumulate(demand.begin(), demand.end(), 0.0);

    std::vector<std::pair<int, double>> curve;
    curve.reserve(windows.size());
    for (int n : windows) {
        if (n < 1 || n > kHoursPerYear)
            throw std::runtime_error("flexibility window out of range: " + std::to_string(n));
        double matched = 0.0;
        for (std::size_t start = 0; start < demand.size(); start += n) {
            const std::size_t end = std::min(start + static_cast<std::size_t>(n), demand.size());
            double d = 0.0, p = 0.0;
            for (std::size_t h = start; h < end; ++h) {
                d += demand[h];
                p += pv[h];
            }
            matched += std::min(d, p);
        }
        curve.emplace_back(n, total > 0.0 ? matched / total : 1.0);
    }
    return curve;
}

std::vector<double> cop_storage_hourly(const std::vector<double>& temperature_k,
                                       const CopParams& cop, const StorageSpec& spec,
                                       const DemandParams& params) {
    const double t_cold = spec.t_storage_k - cop.delta_t2_k;
    std::vector<double> out(temperature_k.size());
    for (std::size_t h = 0; h < temperature_k.size(); ++h) {
        const double t_hot = std::max(temperature_k[h], params.t_base_k) + cop.delta_t1_k;
        out[h] = cop.eta_carnot * t_cold / (t_hot - t_cold);
    }
    return out;
}

StorageResult simulate_storage(const std::vector<double>& demand_kwh,
                               const std::vector<double>& pv_kwh,
                               const std::vector<double>& cop,
                               const std::vector<double>& cop_storage,
                               const StorageSpec& spec, double n_households,
                               double t_base_k) {
    const std::size_t n = demand_kwh.size();
    if (pv_kwh.size() != n || cop.size() != n || cop_storage.size() != n)
        throw std::runtime_error("storage simulation series length mismatch");
    if (n_households < 0.0) throw std::runtime_error("negative household count");

    const double soc_max = n_households * spec.capacity_kwh_th();
    // U*A*dT per household-hour, kWh thermal.
    const double standby_kwh =
        spec.u_value_w_m2k * spec.area_m2 * (t_base_k - spec.t_storage_k) * n_households / 1000.0;

    StorageResult out;
    out.unmet_kwh.resize(n, 0.0);

    double soc = 0.0;
    double total_demand = 0.0, total_unmet = 0.0;
    for (std::size_t h = 0; h < n; ++h) {
        const double loss = std::min(standby_kwh, soc);
        soc -= loss;
        out.loss_kwh_th += loss;
        if (pv_kwh[h] >= demand_kwh[h]) {
            const double charge = std::min((pv_kwh[h] - demand_kwh[h]) * cop_storage[h],
                                           soc_max - soc);
            soc += charge;
            out.charge_kwh_th += charge;
        } else {
            const double deficit_th = (demand_kwh[h] - pv_kwh[h]) * cop[h];
            const double discharge = std::min(deficit_th, soc);
            soc -= discharge;
            out.discharge_kwh_th += discharge;
            out.unmet_kwh[h] = (deficit_th - discharge) / cop[h];
        }
        total_demand += demand_kwh[h];
        total_unmet += out.unmet_kwh[h];
    }
    out.final_soc_kwh_th = soc;
    out.storage_fraction = total_demand > 0.0 ? 1.0 - total_unmet / total_demand : 1.0;
    return out;
}

} // namespace coolgrid
