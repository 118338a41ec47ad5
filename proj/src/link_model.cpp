#include "aggsim/link_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aggsim/units.hpp"

namespace aggsim {

double ChannelParams::l_o_linear() const { return db_to_linear(l_o_db); }

void ChannelParams::validate() const {
    if (!std::isfinite(l_o_db)) throw std::domain_error("channel.l_o_db must be finite");
    if (!(alpha_g > 2.0)) throw std::domain_error("channel.alpha_g must be > 2");
    if (!(alpha_air >= 2.0)) throw std::domain_error("channel.alpha_air must be >= 2");
    if (!(penetration_loss_db >= 0.0))
        throw std::domain_error("channel.penetration_loss_db must be >= 0");
}

double PowerControlParams::p_o_w() const { return dbm_to_watts(p_o_dbm); }
double PowerControlParams::p_max_w() const { return dbm_to_watts(p_max_dbm); }

void PowerControlParams::validate() const {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::domain_error("power.epsilon must be in [0,1]");
    if (!(p_o_dbm <= p_max_dbm))
        throw std::domain_error("power.p_o_dbm must not exceed power.p_max_dbm");
    if (!std::isfinite(p_o_dbm) || !std::isfinite(p_max_dbm))
        throw std::domain_error("power levels must be finite");
}

void LinkBudgetParams::validate() const {
    if (!(bandwidth_hz > 0.0)) throw std::domain_error("budget.bandwidth_hz must be > 0");
}

void LosModelParams::validate() const {
    if (!(gamma1_m > 0.0)) throw std::domain_error("los.gamma1_m must be > 0");
    if (!(gamma2_m > 0.0)) throw std::domain_error("los.gamma2_m must be > 0");
    if (!std::isfinite(altitude_offset_m))
        throw std::domain_error("los.altitude_offset_m must be finite");
}

double path_loss(double r_m, double exponent, const ChannelParams& ch) {
    if (!(r_m > 0.0)) throw std::domain_error("path_loss: distance must be > 0");
    return ch.l_o_linear() * std::pow(r_m, exponent);
}

double path_loss_db(double r_m, double exponent, const ChannelParams& ch) {
    if (!(r_m > 0.0)) throw std::domain_error("path_loss_db: distance must be > 0");
    return ch.l_o_db + 10.0 * exponent * std::log10(r_m);
}

double effective_open_loop_w(double exponent, const PowerControlParams& pc,
                             const ChannelParams& ch) {
    const double lo_exp = pc.open_loop_convention == OpenLoopConvention::kEq10Full
                              ? pc.epsilon * exponent
                              : pc.epsilon;
    return pc.p_o_w() * std::pow(ch.l_o_linear(), lo_exp);
}

double tx_power_w(double r_m, double exponent, const PowerControlParams& pc,
                  const ChannelParams& ch) {
    if (!(r_m > 0.0)) throw std::domain_error("tx_power_w: distance must be > 0");
    const double coef = effective_open_loop_w(exponent, pc, ch);
    return std::min(coef * std::pow(r_m, pc.epsilon * exponent), pc.p_max_w());
}

double saturation_root_m(double exponent, const PowerControlParams& pc,
                         const ChannelParams& ch) {
    const double p_max = pc.p_max_w();
    const double coef = effective_open_loop_w(exponent, pc, ch);
    if (pc.epsilon == 0.0) {
        // Constant transmit power: either never or always at P_max.
        return coef < p_max ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return std::pow(p_max / coef, 1.0 / (pc.epsilon * exponent));
}

double critical_distance_m(const DeploymentStrategy& strategy,
                           const PowerControlParams& pc, const ChannelParams& ch,
                           const ClusterGeometry& geom) {
    geom.validate();
    const double root = saturation_root_m(exponent_for(strategy, ch), pc, ch);
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RandomPpp>) {
                return root;
            } else if constexpr (std::is_same_v<T, ClusterInterior>) {
                return std::min(root, 2.0 * geom.R_m);
            } else if constexpr (std::is_same_v<T, CentroidTerrestrial>) {
                return std::min(root, geom.R_m);
            } else {
                const double h = v.altitude_m;
                return std::min(std::hypot(geom.R_m, h), std::max(h, root));
            }
        },
        strategy);
}

double receiver_sensitivity_dbm(const LinkBudgetParams& lb) {
    return lb.n0_dbm_hz + lb.nf_db + 10.0 * std::log10(lb.bandwidth_hz) + lb.tau_db;
}

double achievable_mcl_db(const LinkBudgetParams& lb, const PowerControlParams& pc) {
    return pc.p_max_dbm - receiver_sensitivity_dbm(lb) + lb.gain_db;
}

PathLossThreshold mcl_to_pathloss_threshold(const LinkBudgetParams& lb,
                                            const ChannelParams& ch) {
    const double mu = db_to_linear(lb.mcl_target_db - ch.penetration_loss_db);
    return {mu, mu / ch.l_o_linear()};
}

double coverage_distance_m(const LinkBudgetParams& lb, const ChannelParams& ch,
                           double exponent) {
    return std::pow(mcl_to_pathloss_threshold(lb, ch).mu_hat, 1.0 / exponent);
}

double los_probability(double d_2d_m, double uav_altitude_m, const LosModelParams& los) {
    los.validate();
    if (!(d_2d_m >= 0.0)) throw std::domain_error("los_probability: distance must be >= 0");
    if (!(uav_altitude_m >= 0.0) || !std::isfinite(uav_altitude_m))
        throw std::domain_error("los_probability: altitude must be >= 0 and finite");
    if (d_2d_m <= los.gamma1_m) return 1.0;
    const double near = los.gamma1_m / d_2d_m;
    const double p = near + std::exp(-d_2d_m / los.gamma2_m) * (1.0 - near);
    return std::clamp(p, 0.0, 1.0);
}

double exponent_for(const DeploymentStrategy& s, const ChannelParams& ch) {
    return is_aerial(s) ? ch.alpha_air : ch.alpha_g;
}

}  // namespace aggsim
