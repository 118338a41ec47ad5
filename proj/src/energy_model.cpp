#include "aggsim/energy_model.hpp"

#include <stdexcept>

namespace aggsim {

void EnergyProfile::validate() const {
    if (!(eta > 0.0 && eta <= 1.0)) throw std::domain_error("energy.eta must be in (0,1]");
    if (p_cp_w < 0.0 || p_rx_w < 0.0 || p_i_w < 0.0 || p_s_w < 0.0)
        throw std::domain_error("energy stage powers must be >= 0");
    if (t_tx_s < 0.0 || t_rx_s < 0.0 || t_i_s < 0.0 || t_s_s < 0.0)
        throw std::domain_error("energy stage durations must be >= 0");
    if (n_rep < 0) throw std::domain_error("energy.n_rep must be >= 0");
    if (!(battery_wh > 0.0)) throw std::domain_error("energy.battery_wh must be > 0");
}

double consumption_w(double avg_pt_w, const EnergyProfile& ep) {
    if (!(avg_pt_w >= 0.0)) throw std::domain_error("consumption_w: power must be >= 0");
    return ep.p_cp_w + avg_pt_w / ep.eta;
}

double daily_energy_j(double avg_ptx_w, const EnergyProfile& ep) {
    if (!(avg_ptx_w >= 0.0)) throw std::domain_error("daily_energy_j: power must be >= 0");
    return ep.n_rep * (ep.t_tx_s * avg_ptx_w + ep.t_rx_s * ep.p_rx_w + ep.t_i_s * ep.p_i_w) +
           ep.t_s_s * ep.p_s_w;
}

double lifetime_years(double daily_energy, const EnergyProfile& ep) {
    if (!(daily_energy > 0.0))
        throw std::domain_error("lifetime_years: daily energy must be > 0");
    return ep.battery_wh / daily_energy * 3600.0 / 365.0;
}

double lifetime_from_tx_power_w(double avg_pt_w, const EnergyProfile& ep) {
    return lifetime_years(daily_energy_j(consumption_w(avg_pt_w, ep), ep), ep);
}

}  // namespace aggsim
