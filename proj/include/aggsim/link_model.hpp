#pragma once

#include "aggsim/geometry.hpp"
#include "aggsim/strategy.hpp"

namespace aggsim {

/// Which open-loop coefficient fractional power control uses below saturation.
/// Both conventions scale the transmit power as r^(epsilon*alpha); they differ
/// in how the 1 m reference loss enters the coefficient.
enum class OpenLoopConvention {
    kEq10Full,            // P_T = min{ P_o * L_o^(eps*alpha) * r^(eps*alpha), P_max }
    kStandardFractional,  // P_T = min{ P_o * (L_o * r^alpha)^eps,             P_max }
};

/// Large-scale channel: power-law path loss L_o * r^alpha with separate
/// exponents for ground-to-ground and ground-to-air links, plus a penetration
/// loss charged against the link budget.
struct ChannelParams {
    double l_o_db = 38.0;              // path loss at the 1 m reference, dB
    double alpha_g = 3.5;              // ground path-loss exponent
    double alpha_air = 2.2;            // ground-to-air path-loss exponent
    double penetration_loss_db = 0.0;  // extra budget loss, dB

    double l_o_linear() const;
    void validate() const;
};

/// Uplink fractional power control.
struct PowerControlParams {
    double p_o_dbm = -46.0;  // open-loop transmit power
    double p_max_dbm = 20.0;
    double epsilon = 0.4;    // power control factor, in [0,1]
    OpenLoopConvention open_loop_convention = OpenLoopConvention::kEq10Full;

    double p_o_w() const;
    double p_max_w() const;
    void validate() const;
};

/// Receiver-side link budget for the coupling-loss coverage metric.
struct LinkBudgetParams {
    double n0_dbm_hz = -174.0;   // thermal noise density
    double nf_db = 5.0;          // noise figure
    double bandwidth_hz = 180e3;
    double tau_db = -4.3;        // required SNR
    double gain_db = 0.0;        // coverage-enhancement gain
    double mcl_target_db = 154.0;

    void validate() const;
};

/// Two-branch ground-to-air LOS probability model. gamma1/gamma2 are
/// environment constants supplied by the user; there are no defaults.
struct LosModelParams {
    double gamma1_m = 0.0;           // distance below which the link is always LOS
    double gamma2_m = 0.0;           // decay distance of the far-field term
    double altitude_offset_m = 0.0;  // correction for device vs. reference height

    void validate() const;
};

/// Linear path loss L_o * r^exponent. Throws std::domain_error for r <= 0.
double path_loss(double r_m, double exponent, const ChannelParams& ch);
double path_loss_db(double r_m, double exponent, const ChannelParams& ch);

/// Coefficient multiplying r^(epsilon*exponent) below saturation, in watts.
/// Depends on the open-loop convention (see OpenLoopConvention).
double effective_open_loop_w(double exponent, const PowerControlParams& pc,
                             const ChannelParams& ch);

/// Fractionally-controlled transmit power, capped at P_max. Watts.
double tx_power_w(double r_m, double exponent, const PowerControlParams& pc,
                  const ChannelParams& ch);

/// Distance at which power control saturates, before any strategy clamp.
/// +inf when the device never saturates (epsilon = 0 and P_o < P_max),
/// 0 when it always does (epsilon = 0 and P_o >= P_max).
double saturation_root_m(double exponent, const PowerControlParams& pc,
                         const ChannelParams& ch);

/// Saturation distance clamped to the strategy's distance support:
/// unclamped for the HPPP deployment, [0, 2R] for cluster-interior,
/// [0, R] for the terrestrial centroid, [h, sqrt(R^2+h^2)] for the aerial one.
double critical_distance_m(const DeploymentStrategy& strategy,
                           const PowerControlParams& pc, const ChannelParams& ch,
                           const ClusterGeometry& geom);

/// Receiver sensitivity: N0 + NF + 10 log10(W) + tau. dBm.
double receiver_sensitivity_dbm(const LinkBudgetParams& lb);

/// Coupling loss the system closes at maximum transmit power: S - Q + G. dB.
double achievable_mcl_db(const LinkBudgetParams& lb, const PowerControlParams& pc);

struct PathLossThreshold {
    double mu;      // linear path-loss budget after penetration loss
    double mu_hat;  // mu with the 1 m reference loss divided out
};

/// Path-loss budget implied by the target MCL. Penetration loss is taken off
/// the budget before the distance-dependent part is compared against it.
PathLossThreshold mcl_to_pathloss_threshold(const LinkBudgetParams& lb,
                                            const ChannelParams& ch);

/// Maximum device-aggregator distance that still meets the MCL budget,
/// for the given path-loss exponent.
double coverage_distance_m(const LinkBudgetParams& lb, const ChannelParams& ch,
                           double exponent);

/// Ground-to-air LOS probability at 2-D distance d_2d. The caller is expected
/// to have already added LosModelParams::altitude_offset_m to the altitude.
/// The two-branch model itself depends only on d_2d.
double los_probability(double d_2d_m, double uav_altitude_m, const LosModelParams& los);

/// Path-loss exponent a strategy's links see (alpha_air for aerial ones).
double exponent_for(const DeploymentStrategy& s, const ChannelParams& ch);

}  // namespace aggsim
