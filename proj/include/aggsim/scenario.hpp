#pragma once

#include <optional>

#include "aggsim/energy_model.hpp"
#include "aggsim/geometry.hpp"
#include "aggsim/link_model.hpp"

namespace aggsim {

/// Complete parameter bundle: channel, power control, link budget, energy
/// profile and cluster geometry. Defaults are the NB-IoT evaluation settings
/// the presets build on.
struct SystemScenario {
    ChannelParams channel;
    PowerControlParams power;
    LinkBudgetParams budget;
    EnergyProfile energy;
    ClusterGeometry geometry;
    std::optional<LosModelParams> los;

    void validate() const {
        channel.validate();
        power.validate();
        budget.validate();
        energy.validate();
        geometry.validate();
        if (los) los->validate();
    }
};

}  // namespace aggsim
