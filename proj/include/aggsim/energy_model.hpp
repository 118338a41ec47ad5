#pragma once

namespace aggsim {

/// Per-device power/duration profile for the four reporting stages
/// (transmit, receive, idle, standby) plus amplifier and battery figures.
struct EnergyProfile {
    double p_cp_w = 0.09;    // circuitry draw while transmitting
    double eta = 0.44;       // power amplifier efficiency, (0,1]
    double p_rx_w = 0.09;
    double p_i_w = 0.003;
    double p_s_w = 1.5e-5;
    double t_tx_s = 0.983;
    double t_rx_s = 0.565;
    double t_i_s = 22.451;
    double t_s_s = 86400.0;  // standby seconds charged once per day
    int n_rep = 12;          // uplink reports per day
    double battery_wh = 5.0;

    void validate() const;
};

/// Device power draw while transmitting at avg_pt_w: circuitry plus the
/// amplifier input power.
double consumption_w(double avg_pt_w, const EnergyProfile& ep);

/// Energy per day in joules, given the average transmit-stage consumption
/// (which already includes circuitry).
double daily_energy_j(double avg_ptx_w, const EnergyProfile& ep);

/// Battery life in years at the given daily energy.
double lifetime_years(double daily_energy, const EnergyProfile& ep);

/// consumption -> daily energy -> lifetime in one step, starting from the
/// radio transmit power.
double lifetime_from_tx_power_w(double avg_pt_w, const EnergyProfile& ep);

}  // namespace aggsim
