#include "aggsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aggsim/distance_laws.hpp"
#include "aggsim/quadrature.hpp"
#include "aggsim/special_functions.hpp"
#include "aggsim/units.hpp"

namespace aggsim {

namespace {

constexpr double kPi = 3.14159265358979323846;

PerfResult make_result(double radio_w, double coverage, const EnergyProfile& ep) {
    PerfResult r;
    r.avg_tx_power_w = consumption_w(radio_w, ep);
    r.coverage_prob = std::clamp(coverage, 0.0, 1.0);
    r.lifetime_years = lifetime_years(daily_energy_j(r.avg_tx_power_w, ep), ep);
    r.source = Provenance::kAnalytic;
    return r;
}

// With epsilon = 0 the transmit power is constant in distance and none of
// the closed forms apply (the saturation root degenerates).
bool constant_power_case(const PowerControlParams& pc, double& radio_w) {
    if (pc.epsilon != 0.0) return false;
    radio_w = std::min(pc.p_o_w(), pc.p_max_w());
    return true;
}

double survival_weight(double psi, int n_minus_1) {
    if (n_minus_1 == 0) return 1.0;
    if (psi >= 1.0) return 0.0;
    return std::exp(static_cast<double>(n_minus_1) * std::log1p(-psi));
}

}  // namespace

PerfResult avg_power_random(double lambda_per_m2, const PowerControlParams& pc,
                            const ChannelParams& ch, const LinkBudgetParams& lb,
                            const EnergyProfile& ep) {
    if (!(lambda_per_m2 > 0.0))
        throw std::domain_error("avg_power_random: density must be > 0");
    pc.validate();
    ch.validate();
    ep.validate();

    const double mu_hat = mcl_to_pathloss_threshold(lb, ch).mu_hat;
    const double coverage =
        -std::expm1(-kPi * lambda_per_m2 * std::pow(mu_hat, 2.0 / ch.alpha_g));

    double radio = 0.0;
    if (!constant_power_case(pc, radio)) {
        const double ea = pc.epsilon * ch.alpha_g;
        const double coef = effective_open_loop_w(ch.alpha_g, pc, ch);
        const double zeta = saturation_root_m(ch.alpha_g, pc, ch);
        const double x = kPi * lambda_per_m2 * zeta * zeta;
        radio = coef * std::pow(kPi * lambda_per_m2, -0.5 * ea) *
                    lower_incomplete_gamma(1.0 + 0.5 * ea, x) +
                pc.p_max_w() * std::exp(-x);
    }
    return make_result(radio, coverage, ep);
}

double avg_power_random_unbounded_w(double lambda_per_m2, const PowerControlParams& pc,
                                    const ChannelParams& ch, const EnergyProfile& ep) {
    if (!(lambda_per_m2 > 0.0))
        throw std::domain_error("avg_power_random_unbounded_w: density must be > 0");
    const double ea = pc.epsilon * ch.alpha_g;
    const double coef = effective_open_loop_w(ch.alpha_g, pc, ch);
    const double radio =
        coef * std::pow(kPi * lambda_per_m2, -0.5 * ea) * std::tgamma(1.0 + 0.5 * ea);
    return consumption_w(radio, ep);
}

double min_density_per_m2(double beta, const LinkBudgetParams& lb,
                          const ChannelParams& ch) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::domain_error("min_density_per_m2: beta must be in (0,1)");
    const double mu_hat = mcl_to_pathloss_threshold(lb, ch).mu_hat;
    return std::log(1.0 / (1.0 - beta)) / (kPi * std::pow(mu_hat, 2.0 / ch.alpha_g));
}

PerfResult avg_power_cluster_interior(double R_m, int n_aggregators,
                                      const PowerControlParams& pc,
                                      const ChannelParams& ch, const LinkBudgetParams& lb,
                                      const EnergyProfile& ep) {
    if (!(R_m > 0.0)) throw std::domain_error("avg_power_cluster_interior: R must be > 0");
    if (n_aggregators < 1)
        throw std::domain_error("avg_power_cluster_interior: N must be >= 1");
    pc.validate();
    ch.validate();
    ep.validate();

    const DistanceLaw law = law_cluster_interior(R_m, n_aggregators);
    const double mu_hat = mcl_to_pathloss_threshold(lb, ch).mu_hat;
    const double coverage = law.cdf(std::min(std::pow(mu_hat, 1.0 / ch.alpha_g), 2.0 * R_m));

    double radio = 0.0;
    if (!constant_power_case(pc, radio)) {
        const double ea = pc.epsilon * ch.alpha_g;
        const double coef = effective_open_loop_w(ch.alpha_g, pc, ch);
        const double root = saturation_root_m(ch.alpha_g, pc, ch);
        const double zeta = std::min(root, 2.0 * R_m);
        const int n = n_aggregators;

        if (zeta > 0.0) {
            const auto moment = [&](double r) {
                return std::pow(r, ea) * disk_pair_pdf(r, R_m) *
                       survival_weight(psi_cdf(r, R_m), n - 1);
            };
            radio += coef * n * integrate(moment, 0.0, zeta).value;
        }
        if (root < 2.0 * R_m) {
            const auto tail = [&](double r) {
                return disk_pair_pdf(r, R_m) * survival_weight(psi_cdf(r, R_m), n - 1);
            };
            radio += pc.p_max_w() * n * integrate(tail, zeta, 2.0 * R_m).value;
        }
    }
    return make_result(radio, coverage, ep);
}

double avg_power_cluster_interior_unbounded_n1_w(double R_m, const PowerControlParams& pc,
                                                 const ChannelParams& ch,
                                                 const EnergyProfile& ep) {
    if (!(R_m > 0.0))
        throw std::domain_error("avg_power_cluster_interior_unbounded_n1_w: R must be > 0");
    const double ea = pc.epsilon * ch.alpha_g;
    const double coef = effective_open_loop_w(ch.alpha_g, pc, ch);
    const double shape_ratio = 8.0 * std::tgamma(0.5 * (3.0 + ea)) /
                               (std::sqrt(kPi) * (2.0 + ea) * std::tgamma(0.5 * (6.0 + ea)));
    const double radio = coef * shape_ratio * std::pow(2.0 * R_m, ea);
    return consumption_w(radio, ep);
}

PerfResult avg_power_centroid(double R_m, double h_m, double exponent,
                              const PowerControlParams& pc, const ChannelParams& ch,
                              const LinkBudgetParams& lb, const EnergyProfile& ep) {
    if (!(R_m > 0.0)) throw std::domain_error("avg_power_centroid: R must be > 0");
    if (!(h_m >= 0.0)) throw std::domain_error("avg_power_centroid: h must be >= 0");
    pc.validate();
    ch.validate();
    ep.validate();

    const double R2 = R_m * R_m;
    const double h2 = h_m * h_m;
    const double mu_hat = mcl_to_pathloss_threshold(lb, ch).mu_hat;
    const double reach2 = std::pow(mu_hat, 2.0 / exponent);
    const double coverage = (std::min(reach2, R2 + h2) - std::min(reach2, h2)) / R2;

    double radio = 0.0;
    if (!constant_power_case(pc, radio)) {
        const double ea = pc.epsilon * exponent;
        const double p2 = 2.0 + ea;
        const double coef = effective_open_loop_w(exponent, pc, ch);
        const double root = saturation_root_m(exponent, pc, ch);
        const double top = std::sqrt(R2 + h2);
        const double zeta = std::min(top, std::max(h_m, root));

        radio = coef * 2.0 / (p2 * R2) * (std::pow(zeta, p2) - std::pow(h_m, p2));
        // Saturated mass, written in terms of the unclamped root so the
        // weight is exactly 0 / 1 in the clamped branches.
        double sat_weight;
        if (root >= top)
            sat_weight = 0.0;
        else if (root <= h_m)
            sat_weight = 1.0;
        else
            sat_weight = (R2 + h2 - root * root) / R2;
        radio += pc.p_max_w() * sat_weight;
    }
    return make_result(radio, coverage, ep);
}

double avg_power_centroid_unbounded_w(double R_m, double h_m, double exponent,
                                      const PowerControlParams& pc,
                                      const ChannelParams& ch, const EnergyProfile& ep) {
    if (!(R_m > 0.0))
        throw std::domain_error("avg_power_centroid_unbounded_w: R must be > 0");
    const double ea = pc.epsilon * exponent;
    const double p2 = 2.0 + ea;
    const double R2 = R_m * R_m;
    const double coef = effective_open_loop_w(exponent, pc, ch);
    const double radio =
        coef * 2.0 / (p2 * R2) *
        (std::pow(R2 + h_m * h_m, 0.5 * p2) - std::pow(h_m, p2));
    return consumption_w(radio, ep);
}

PerfResult analytic_performance(const DeploymentStrategy& strategy,
                                const SystemScenario& scenario) {
    scenario.validate();
    aggsim::validate(strategy);
    const double R = scenario.geometry.R_m;
    return std::visit(
        [&](const auto& v) -> PerfResult {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RandomPpp>) {
                return avg_power_random(v.lambda_per_m2, scenario.power, scenario.channel,
                                        scenario.budget, scenario.energy);
            } else if constexpr (std::is_same_v<T, ClusterInterior>) {
                return avg_power_cluster_interior(R, v.n_aggregators, scenario.power,
                                                  scenario.channel, scenario.budget,
                                                  scenario.energy);
            } else if constexpr (std::is_same_v<T, CentroidTerrestrial>) {
                return avg_power_centroid(R, 0.0, scenario.channel.alpha_g, scenario.power,
                                          scenario.channel, scenario.budget,
                                          scenario.energy);
            } else {
                return avg_power_centroid(R, v.altitude_m, scenario.channel.alpha_air,
                                          scenario.power, scenario.channel,
                                          scenario.budget, scenario.energy);
            }
        },
        strategy);
}

}  // namespace aggsim
