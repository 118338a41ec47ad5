#pragma once

#include <string>
#include <vector>

#include "aggsim/montecarlo.hpp"
#include "aggsim/scenario.hpp"
#include "aggsim/strategy.hpp"

namespace aggsim {

enum class SweepAxis {
    kPcfEpsilon,
    kClusterRadius,
    kDensity,
    kNAggregators,
    kAltitude,
    kPenetrationDb,
};

enum class Metric { kPower, kLifetime, kCoverage };

enum class RunMode { kAnalytic, kMc, kBoth };

std::string axis_name(SweepAxis axis);
std::string metric_name(Metric m);
std::string mode_name(RunMode m);

/// One swept axis with the strategies to compare and the metrics to emit.
struct SweepSpec {
    SweepAxis axis = SweepAxis::kPcfEpsilon;
    std::vector<double> grid;  // strictly increasing, nonempty
    std::vector<DeploymentStrategy> strategies;
    std::vector<Metric> outputs;  // kept in canonical power,lifetime,coverage order
    RunMode mode = RunMode::kAnalytic;

    void validate() const;
};

struct LoadedConfig {
    SystemScenario scenario;
    SweepSpec sweep;
    SimConfig sim;
    std::string sample_dump_path;  // empty = no raw-sample dump
};

/// Parse and validate a flat key-value config file (dotted section names,
/// '#' comments). Unknown keys, missing required keys and invariant
/// violations raise ConfigError naming the key and line.
LoadedConfig load_config(const std::string& path);
LoadedConfig load_config_text(const std::string& text, const std::string& origin);

/// Canonical config text with every default filled in. Feeding it back to
/// load_config_text reproduces the configuration exactly.
std::string dump_effective(const LoadedConfig& cfg);

/// Built-in scenarios: table1, fig3a, fig3b, fig4a, fig4b.
LoadedConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace aggsim
