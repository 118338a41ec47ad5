#include "aggsim/strategy.hpp"

#include <stdexcept>

#include "fmt_util.hpp"

namespace aggsim {

bool is_aerial(const DeploymentStrategy& s) {
    return std::holds_alternative<CentroidAerial>(s);
}

std::string strategy_label(const DeploymentStrategy& s) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RandomPpp>)
                return "random(λ=" + fmt_9g(v.lambda_per_m2) + ")";
            else if constexpr (std::is_same_v<T, ClusterInterior>)
                return "cluster_interior(N=" + std::to_string(v.n_aggregators) + ")";
            else if constexpr (std::is_same_v<T, CentroidTerrestrial>)
                return "centroid_terrestrial";
            else
                return "centroid_aerial(h=" + fmt_9g(v.altitude_m) + ")";
        },
        s);
}

std::string strategy_spec_string(const DeploymentStrategy& s) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RandomPpp>)
                return "random(" + fmt_shortest(v.lambda_per_m2) + ")";
            else if constexpr (std::is_same_v<T, ClusterInterior>)
                return "cluster_interior(" + std::to_string(v.n_aggregators) + ")";
            else if constexpr (std::is_same_v<T, CentroidTerrestrial>)
                return "centroid_terrestrial";
            else
                return "centroid_aerial(" + fmt_shortest(v.altitude_m) + ")";
        },
        s);
}

DeploymentStrategy parse_strategy(const std::string& text) {
    auto arg_of = [&](const std::string& name) -> std::string {
        // text is known to start with name + "("
        if (text.back() != ')')
            throw std::invalid_argument("strategy '" + text + "': missing ')'");
        return text.substr(name.size() + 1, text.size() - name.size() - 2);
    };

    if (text == "centroid_terrestrial") return CentroidTerrestrial{};
    if (text.rfind("random(", 0) == 0) {
        return RandomPpp{std::stod(arg_of("random"))};
    }
    if (text.rfind("cluster_interior(", 0) == 0) {
        const std::string arg = arg_of("cluster_interior");
        size_t pos = 0;
        const int n = std::stoi(arg, &pos);
        if (pos != arg.size())
            throw std::invalid_argument("cluster_interior count must be an integer, got '" +
                                        arg + "'");
        return ClusterInterior{n};
    }
    if (text.rfind("centroid_aerial(", 0) == 0) {
        return CentroidAerial{std::stod(arg_of("centroid_aerial"))};
    }
    throw std::invalid_argument(
        "unknown strategy '" + text +
        "' (expected random(<lambda_per_m2>), cluster_interior(<N>), "
        "centroid_terrestrial, or centroid_aerial(<h_m>))");
}

void validate(const DeploymentStrategy& s) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RandomPpp>) {
                if (!(v.lambda_per_m2 > 0.0))
                    throw std::domain_error("random: density must be > 0");
            } else if constexpr (std::is_same_v<T, ClusterInterior>) {
                if (v.n_aggregators < 1)
                    throw std::domain_error("cluster_interior: N must be >= 1");
            } else if constexpr (std::is_same_v<T, CentroidAerial>) {
                if (!(v.altitude_m >= 0.0))
                    throw std::domain_error("centroid_aerial: altitude must be >= 0");
            }
        },
        s);
}

}  // namespace aggsim
