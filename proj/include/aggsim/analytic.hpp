#pragma once

#include "aggsim/energy_model.hpp"
#include "aggsim/link_model.hpp"
#include "aggsim/scenario.hpp"
#include "aggsim/strategy.hpp"

namespace aggsim {

enum class Provenance { kAnalytic, kMonteCarlo };

/// One strategy's performance at one parameter point. avg_tx_power_w is the
/// full transmit-stage consumption (circuitry plus amplifier input). The
/// ci_* fields are 95% half-widths, 0 for analytic results.
struct PerfResult {
    double avg_tx_power_w = 0.0;
    double coverage_prob = 0.0;
    double lifetime_years = 0.0;
    Provenance source = Provenance::kAnalytic;
    double ci_power_w = 0.0;
    double ci_coverage = 0.0;
    double ci_lifetime_years = 0.0;
};

/// Closed-form power and coverage under HPPP-deployed aggregators.
PerfResult avg_power_random(double lambda_per_m2, const PowerControlParams& pc,
                            const ChannelParams& ch, const LinkBudgetParams& lb,
                            const EnergyProfile& ep);

/// Same with the P_max cap removed; the radio term scales as lambda^(-eps*alpha_g/2).
double avg_power_random_unbounded_w(double lambda_per_m2, const PowerControlParams& pc,
                                    const ChannelParams& ch, const EnergyProfile& ep);

/// Smallest HPPP density whose coverage probability reaches beta.
double min_density_per_m2(double beta, const LinkBudgetParams& lb,
                          const ChannelParams& ch);

/// Power and coverage with N aggregators uniform in the cluster; the power
/// expectation integrates the nearest-of-N distance law by adaptive quadrature.
PerfResult avg_power_cluster_interior(double R_m, int n_aggregators,
                                      const PowerControlParams& pc,
                                      const ChannelParams& ch, const LinkBudgetParams& lb,
                                      const EnergyProfile& ep);

/// Unbounded-power closed form for a single interior aggregator; the radio
/// term scales as (2R)^(eps*alpha_g).
double avg_power_cluster_interior_unbounded_n1_w(double R_m, const PowerControlParams& pc,
                                                 const ChannelParams& ch,
                                                 const EnergyProfile& ep);

/// Power and coverage with the aggregator fixed over the cluster center at
/// altitude h (h = 0, exponent = alpha_g gives the terrestrial centroid).
PerfResult avg_power_centroid(double R_m, double h_m, double exponent,
                              const PowerControlParams& pc, const ChannelParams& ch,
                              const LinkBudgetParams& lb, const EnergyProfile& ep);

/// Unbounded-power centroid closed form; radio term scales as R^(eps*alpha)
/// for h = 0.
double avg_power_centroid_unbounded_w(double R_m, double h_m, double exponent,
                                      const PowerControlParams& pc,
                                      const ChannelParams& ch, const EnergyProfile& ep);

/// Dispatch on the deployment strategy using the scenario's geometry.
PerfResult analytic_performance(const DeploymentStrategy& strategy,
                                const SystemScenario& scenario);

}  // namespace aggsim
