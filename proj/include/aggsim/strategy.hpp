#pragma once

#include <string>
#include <variant>

namespace aggsim {

// Aggregator deployment strategies. A device always associates with its
// nearest aggregator (3-D distance for the aerial one).

struct RandomPpp {
    double lambda_per_m2;  // HPPP density of terrestrial aggregators
    bool operator==(const RandomPpp&) const = default;
};

struct ClusterInterior {
    int n_aggregators;  // N aggregators dropped uniformly inside the cluster
    bool operator==(const ClusterInterior&) const = default;
};

struct CentroidTerrestrial {  // single aggregator at the cluster center
    bool operator==(const CentroidTerrestrial&) const = default;
};

struct CentroidAerial {
    double altitude_m;  // UAV hovering over the cluster center
    bool operator==(const CentroidAerial&) const = default;
};

using DeploymentStrategy =
    std::variant<RandomPpp, ClusterInterior, CentroidTerrestrial, CentroidAerial>;

bool is_aerial(const DeploymentStrategy& s);

/// Fixed label used in CSV output, e.g. "random(λ=5e-06)".
std::string strategy_label(const DeploymentStrategy& s);

/// Plain-ASCII spelling used in config files, e.g. "random(5e-06)".
/// parse_strategy is its inverse.
std::string strategy_spec_string(const DeploymentStrategy& s);
DeploymentStrategy parse_strategy(const std::string& text);

void validate(const DeploymentStrategy& s);

}  // namespace aggsim
